#include "seaweed/json_io.hpp"

#include <sstream>

namespace seaweed {

namespace {

Json with_schema(const SeaweedType& t) {
  Json j;
  j["schema"] = kSchemaTag;
  j["type"] = format_type(t);
  j["n"] = t.n();
  return j;
}

Json json_pairs(const std::vector<std::pair<int, int>>& pairs) {
  Json arr = Json::array();
  for (auto [a, b] : pairs) arr.push_back(Json::array({a, b}));
  return arr;
}

Json json_arcs(const std::vector<Arc>& arcs) {
  Json arr = Json::array();
  for (const Arc& a : arcs) arr.push_back(Json::array({a.lo, a.hi}));
  return arr;
}

Json block_entry(const SeaweedType& t, const DirectedMeander& dm, BlockSide side, int index) {
  auto [first, last] = block_range(t, side == BlockSide::Top, index);
  Json j;
  j["side"] = side == BlockSide::Top ? "top" : "bottom";
  j["index"] = index;
  j["size"] = last - first + 1;
  j["range"] = Json::array({first, last});
  j["contribution"] = json_spectrum(block_contribution(dm, side, index));
  return j;
}

}  // namespace

Json json_spectrum(const SpectrumMultiset& s) {
  Json j = Json::object();
  for (auto [value, mult] : s.counts) j[std::to_string(value)] = mult;
  return j;
}

Json json_rationals(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& r : values) arr.push_back(fraction_string(r));
  return arr;
}

Json parse_payload(const SeaweedType& t) {
  Json j = with_schema(t);
  j["top"] = t.top().parts();
  j["bottom"] = t.bottom().parts();
  return j;
}

Json meander_payload(const Meander& m) {
  Json j = with_schema(m.type());
  j["top_arcs"] = json_arcs(m.top_arcs());
  j["bottom_arcs"] = json_arcs(m.bottom_arcs());
  const DirectedMeander dm = orient(m);
  j["directed_edges"] = json_pairs(dm.all_edges());
  const ComponentReport rep = components(m);
  Json comps = Json::array();
  for (const Component& c : rep.components) {
    Json entry;
    entry["kind"] = c.kind == Component::Kind::Path ? "path" : "cycle";
    entry["vertices"] = c.vertices;
    comps.push_back(std::move(entry));
  }
  j["components"] = Json{{"paths", rep.paths}, {"cycles", rep.cycles}, {"list", std::move(comps)}};
  j["frobenius"] = rep.paths == 1 && rep.cycles == 0;
  j["index"] = 2 * rep.cycles + rep.paths - 1;
  return j;
}

Json index_payload(const SeaweedType& t) {
  const ComponentReport rep = components(build_meander(t));
  Json j = with_schema(t);
  j["index"] = 2 * rep.cycles + rep.paths - 1;
  j["paths"] = rep.paths;
  j["cycles"] = rep.cycles;
  return j;
}

Json frobenius_payload(const SeaweedType& t) {
  Json j = with_schema(t);
  j["frobenius"] = is_frobenius(build_meander(t));
  return j;
}

Json spectrum_payload(const SeaweedType& t) {
  const DirectedMeander dm = directed_meander(t);
  const PrincipalElement pe = principal_element(dm);
  const SeaweedShape shape = seaweed_shape(t);

  Json j = with_schema(t);
  j["frobenius"] = true;
  j["principal_element"] = json_rationals(pe.diag);
  j["spectrum"] = json_spectrum(spectrum(t));
  j["dimension"] = shape.dimension();
  Json blocks = Json::array();
  for (int k = 1; k <= t.top().size(); ++k) blocks.push_back(block_entry(t, dm, BlockSide::Top, k));
  for (int k = 1; k <= t.bottom().size(); ++k) {
    blocks.push_back(block_entry(t, dm, BlockSide::Bottom, k));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json principal_payload(const SeaweedType& t, int reference_vertex) {
  const PrincipalElement pe = principal_element(directed_meander(t), reference_vertex);
  Json j = with_schema(t);
  j["reference_vertex"] = pe.reference_vertex;
  j["raw_measures"] = pe.raw_measures;
  j["principal_element"] = json_rationals(pe.diag);
  return j;
}

Json blocks_payload(const SeaweedType& t) {
  const DirectedMeander dm = directed_meander(t);
  [[maybe_unused]] const PathMeasures guard(dm);  // reject non-Frobenius input up front
  Json j = with_schema(t);
  Json blocks = Json::array();
  for (int k = 1; k <= t.top().size(); ++k) blocks.push_back(block_entry(t, dm, BlockSide::Top, k));
  for (int k = 1; k <= t.bottom().size(); ++k) {
    blocks.push_back(block_entry(t, dm, BlockSide::Bottom, k));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json simple_payload(const SeaweedType& t) {
  const SimpleEigenvalues simple = simple_eigenvalues(directed_meander(t));
  Json j = with_schema(t);
  Json top = Json::object();
  for (auto [pos, value] : simple.top) top[std::to_string(pos)] = value;
  Json bottom = Json::object();
  for (auto [pos, value] : simple.bottom) bottom[std::to_string(pos)] = value;
  j["top"] = std::move(top);
  j["bottom"] = std::move(bottom);
  return j;
}

Json windup_payload(const SeaweedType& t, MoveKind move) {
  Json j = with_schema(t);
  j["move"] = std::string(move_name(move));
  j["result"] = format_type(wind_up(t, move));
  return j;
}

Json oracle_payload(const SeaweedType& t) {
  const int index = oracle_index(t);
  const int gidx = graph_index(build_meander(t));
  Json j = with_schema(t);
  j["index"] = index;
  j["dimension"] = seaweed_shape(t).dimension();
  bool agrees = index == gidx;
  if (index == 0) {
    const PrincipalElement oracle_pe = oracle_principal(t);
    const SpectrumMultiset oracle_sp = oracle_spectrum(t);
    agrees = agrees && oracle_pe.diag == principal_element(directed_meander(t)).diag &&
             oracle_sp == spectrum(t);
    j["principal_element"] = json_rationals(oracle_pe.diag);
    j["spectrum"] = json_spectrum(oracle_sp);
  }
  j["agrees_with_meander"] = agrees;
  return j;
}

Json theorem_payload(const TheoremReport& r) {
  Json j = with_schema(r.type);
  j["frobenius"] = r.frobenius;
  j["index"] = r.index;
  j["spectral_checked"] = r.spectral_checked;
  if (r.spectral_checked) {
    j["spectrum"] = json_spectrum(r.spectrum);
    j["unbroken"] = r.unbroken.unbroken;
    j["interval"] = Json::array({r.unbroken.min, r.unbroken.max});
    j["symmetric"] = r.symmetric;
    j["centered"] = r.centered;
    j["unimodal"] = r.unimodal_global;
    j["unimodal_blocks"] = r.unimodal_blocks;
    j["blocks_partition_spectrum"] = r.blocks_partition_spectrum;
    j["simple_magnitudes_ok"] = r.simple_magnitudes_ok;
    j["simple_routes_agree"] = r.simple_routes_agree;
    Json blocks = Json::array();
    for (const BlockReport& b : r.per_block) {
      Json entry;
      entry["side"] = b.side == BlockSide::Top ? "top" : "bottom";
      entry["index"] = b.index;
      entry["size"] = b.size;
      entry["symmetric"] = b.symmetric;
      entry["sigma_unbroken"] = b.sigma_unbroken;
      entry["tau_unbroken"] = b.tau_unbroken;
      entry["unimodal"] = b.unimodal;
      entry["contribution"] = json_spectrum(b.contribution);
      blocks.push_back(std::move(entry));
    }
    j["per_block"] = std::move(blocks);
    j["all_ok"] = r.all_ok();
  }
  return j;
}

Json windup_report_payload(const WindupReport& r) {
  Json j;
  j["schema"] = kSchemaTag;
  j["from"] = format_type(r.from);
  j["move"] = std::string(move_name(r.move));
  j["to"] = format_type(r.to);
  if (r.has_gamma) j["gamma"] = r.gamma;
  Json eqs = Json::array();
  for (const EquationCheck& eq : r.equations) {
    Json entry;
    entry["name"] = eq.name;
    entry["lhs"] = eq.lhs;
    entry["rhs"] = eq.rhs;
    entry["holds"] = eq.holds;
    eqs.push_back(std::move(entry));
  }
  j["equations"] = std::move(eqs);
  j["all_hold"] = r.all_hold();
  return j;
}

Json sweep_payload(const std::vector<SweepSummary>& summaries) {
  Json j;
  j["schema"] = kSchemaTag;
  Json list = Json::array();
  for (const SweepSummary& s : summaries) {
    Json entry;
    entry["n"] = s.n;
    entry["pairs_total"] = s.pairs_total;
    entry["frobenius_count"] = s.frobenius_count;
    Json violations = Json::array();
    for (const Violation& v : s.violations) {
      violations.push_back(Json{{"type", format_type(v.type)}, {"check", v.check}});
    }
    entry["violations"] = std::move(violations);
    list.push_back(std::move(entry));
  }
  j["summaries"] = std::move(list);
  return j;
}

std::string winddown_lines(const WindingTrace& trace) {
  std::ostringstream out;
  for (const auto& [move, type] : trace.steps) {
    out << Json{{"move", std::string(move_name(move))}, {"type", format_type(type)}}.dump()
        << "\n";
  }
  out << Json{{"outcome", trace.outcome == WindingTrace::Outcome::Completed ? "completed"
                                                                            : "stalled"}}
             .dump()
      << "\n";
  return out.str();
}

std::string sweep_csv(int n_min, int n_max) {
  if (n_min < 1 || n_min > n_max) throw PreconditionError("invalid sweep range");
  if (n_max > kMaxSweepN) {
    throw PreconditionError("sweep cap is n <= " + std::to_string(kMaxSweepN));
  }
  std::ostringstream out;
  out << "n,type,frobenius,index,min,max,unbroken,symmetric,unimodal\n";
  for (int n = n_min; n <= n_max; ++n) {
    const std::vector<Composition> comps = all_compositions(n);
    for (const Composition& top : comps) {
      for (const Composition& bottom : comps) {
        const SeaweedType t(top, bottom);
        const Meander m = build_meander(t);
        const ComponentReport rep = components(m);
        const bool frob = rep.paths == 1 && rep.cycles == 0;
        out << n << "," << format_type(t) << "," << (frob ? "true" : "false") << ","
            << 2 * rep.cycles + rep.paths - 1 << ",";
        if (frob && n >= 2) {
          const SpectrumMultiset sp = spectrum(t);
          const UnbrokenCheck u = check_unbroken(sp);
          out << u.min << "," << u.max << "," << (u.unbroken ? "true" : "false") << ","
              << (check_symmetric(sp) ? "true" : "false") << ","
              << (check_unimodal(sp) ? "true" : "false");
        } else {
          out << ",,,,";
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

Json error_payload(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace seaweed
