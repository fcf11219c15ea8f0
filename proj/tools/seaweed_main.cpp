// Command-line front end: every pipeline stage with machine-readable output.
//
// Exit codes: 0 success, 1 usage or parse errors, 2 an operation that needs a
// Frobenius type was given something else, 3 a sweep found a unimodality
// counterexample.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "seaweed/json_io.hpp"
#include "seaweed/render.hpp"
#include "seaweed/verify.hpp"

using namespace seaweed;

namespace {

struct Output {
  std::string format = "json";
  std::string path;  // empty = stdout

  void emit(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file " + path);
    file << payload;
    if (!payload.empty() && payload.back() != '\n') file << "\n";
  }

  void emit(const Json& payload) const { emit(payload.dump(2)); }
};

void add_output_options(CLI::App* cmd, Output& out, const std::string& formats) {
  cmd->add_option("--format", out.format, "Output format (" + formats + ")")
      ->check(CLI::IsMember(CLI::detail::split(formats, '|')));
  cmd->add_option("--out", out.path, "Write output to a file instead of standard out");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotFrobeniusError*>(&e)) return 2;
  return 1;
}

std::string error_kind_name(const std::exception& e) {
  if (auto* p = dynamic_cast<const ParseError*>(&e)) {
    switch (p->kind()) {
      case ParseError::Kind::Syntax: return "syntax";
      case ParseError::Kind::ZeroPart: return "zero-part";
      case ParseError::Kind::SumMismatch: return "sum-mismatch";
      case ParseError::Kind::LimitExceeded: return "limit-exceeded";
    }
  }
  if (dynamic_cast<const NotFrobeniusError*>(&e)) return "not-frobenius";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const EmptySpectrumError*>(&e)) return "empty-spectrum";
  if (dynamic_cast<const InternalError*>(&e)) return "internal";
  return "error";
}

std::string text_spectrum(const SpectrumMultiset& s) {
  std::string out = "{";
  bool first = true;
  for (auto [value, mult] : s.counts) {
    for (long long k = 0; k < mult; ++k) {
      if (!first) out += ",";
      out += std::to_string(value);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meander graphs, Frobenius seaweeds, and principal element spectra"};
  app.require_subcommand(1);

  std::string type_text;
  std::string move_text;
  Output out;
  int ref_vertex = 0;
  bool directed = false;
  bool with_windup = false;
  bool csv = false;
  SweepOptions sweep_opt;
  sweep_opt.n_min = 1;
  sweep_opt.n_max = 8;
  sweep_opt.oracle_up_to = -1;  // default: min(8, n_max)

  auto* cmd_parse = app.add_subcommand("parse", "Validate a type symbol and echo its parts");
  auto* cmd_meander = app.add_subcommand("meander", "Arcs, orientation and components");
  auto* cmd_index = app.add_subcommand("index", "Index from the component count");
  auto* cmd_frobenius = app.add_subcommand("frobenius", "Single-path test");
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Principal element spectrum by measures");
  auto* cmd_principal = app.add_subcommand("principal", "Measure vector and principal element");
  auto* cmd_blocks = app.add_subcommand("blocks", "Per-block eigenvalue contributions");
  auto* cmd_simple = app.add_subcommand("simple", "Simple eigenvalues, both routes");
  auto* cmd_wind_down = app.add_subcommand("wind-down", "Contraction trace as JSON lines");
  auto* cmd_wind_up = app.add_subcommand("wind-up", "Apply one expansion move");
  auto* cmd_oracle = app.add_subcommand("oracle", "Exact Kirillov-form cross check");
  auto* cmd_verify = app.add_subcommand("verify", "Theorem and lemma checks for one type");
  auto* cmd_sweep = app.add_subcommand("sweep", "Exhaustive checks over all composition pairs");

  for (CLI::App* cmd : {cmd_parse, cmd_meander, cmd_index, cmd_frobenius, cmd_spectrum,
                        cmd_principal, cmd_blocks, cmd_simple, cmd_wind_down, cmd_wind_up,
                        cmd_oracle, cmd_verify}) {
    cmd->add_option("type", type_text, "Type symbol, e.g. \"2|4/1|2|3\"")->required();
  }
  cmd_meander->add_flag("--directed", directed, "Emit the directed meander");
  cmd_wind_up
      ->add_option("move", move_text,
                   "block-creation | rotation-expansion | pure-expansion | flip-up")
      ->required();
  cmd_principal->add_option("--ref-vertex", ref_vertex, "Reference vertex (default: v_n)");
  cmd_verify->add_flag("--windup", with_windup, "Also check the expansion-move identities");

  for (CLI::App* cmd : {cmd_parse, cmd_index, cmd_frobenius, cmd_spectrum, cmd_principal,
                        cmd_blocks, cmd_simple, cmd_wind_down, cmd_wind_up, cmd_oracle,
                        cmd_verify}) {
    add_output_options(cmd, out, "json|text");
  }
  add_output_options(cmd_meander, out, "json|dot|svg|text");
  add_output_options(cmd_sweep, out, "json|csv");

  cmd_sweep->add_option("--n-min", sweep_opt.n_min, "Smallest n (default 1)");
  cmd_sweep->add_option("--n-max", sweep_opt.n_max, "Largest n (default 8)");
  cmd_sweep->add_option("--oracle-up-to", sweep_opt.oracle_up_to,
                        "Run exact-arithmetic cross checks up to this n (default min(8, n-max))");
  cmd_sweep->add_option("--jobs", sweep_opt.jobs, "Worker threads (default: hardware)");
  cmd_sweep->add_flag("--csv", csv, "Emit the per-type table instead of summaries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cmd_parse)) {
      out.emit(parse_payload(parse_type(type_text)));
      return 0;
    }
    if (app.got_subcommand(cmd_meander)) {
      const SeaweedType t = parse_type(type_text);
      const Meander m = build_meander(t);
      if (out.format == "dot") {
        out.emit(directed ? to_dot(orient(m)) : to_dot(m));
      } else if (out.format == "svg") {
        out.emit(directed ? to_svg(orient(m)) : to_svg(m));
      } else if (out.format == "text") {
        out.emit(format_type(t) + ": index " + std::to_string(graph_index(m)) +
                 (is_frobenius(m) ? ", frobenius" : ", not frobenius"));
      } else {
        out.emit(meander_payload(m));
      }
      return 0;
    }
    if (app.got_subcommand(cmd_index)) {
      out.emit(index_payload(parse_type(type_text)));
      return 0;
    }
    if (app.got_subcommand(cmd_frobenius)) {
      const SeaweedType t = parse_type(type_text);
      if (out.format == "text") {
        out.emit(format_type(t) +
                 (is_frobenius(build_meander(t)) ? ": frobenius" : ": not frobenius"));
      } else {
        out.emit(frobenius_payload(t));
      }
      return 0;
    }
    if (app.got_subcommand(cmd_spectrum)) {
      const SeaweedType t = parse_type(type_text);
      if (out.format == "text") {
        out.emit(format_type(t) + ": " + text_spectrum(spectrum(t)));
      } else {
        out.emit(spectrum_payload(t));
      }
      return 0;
    }
    if (app.got_subcommand(cmd_principal)) {
      out.emit(principal_payload(parse_type(type_text), ref_vertex));
      return 0;
    }
    if (app.got_subcommand(cmd_blocks)) {
      out.emit(blocks_payload(parse_type(type_text)));
      return 0;
    }
    if (app.got_subcommand(cmd_simple)) {
      out.emit(simple_payload(parse_type(type_text)));
      return 0;
    }
    if (app.got_subcommand(cmd_wind_down)) {
      out.emit(winddown_lines(wind_down_sequence(parse_type(type_text))));
      return 0;
    }
    if (app.got_subcommand(cmd_wind_up)) {
      const auto move = move_from_name(move_text);
      if (!move || is_down_move(*move)) {
        throw PreconditionError("unknown expansion move: " + move_text);
      }
      out.emit(windup_payload(parse_type(type_text), *move));
      return 0;
    }
    if (app.got_subcommand(cmd_oracle)) {
      out.emit(oracle_payload(parse_type(type_text)));
      return 0;
    }
    if (app.got_subcommand(cmd_verify)) {
      const SeaweedType t = parse_type(type_text);
      Json payload = theorem_payload(check_theorem(t));
      if (with_windup) {
        Json reports = Json::array();
        for (MoveKind move : {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                              MoveKind::PureExpansion}) {
          if (!windup_equations_applicable(t, move)) continue;
          reports.push_back(windup_report_payload(check_windup_equations(t, move)));
        }
        payload["windup"] = std::move(reports);
      }
      out.emit(payload);
      return 0;
    }
    if (app.got_subcommand(cmd_sweep)) {
      if (sweep_opt.oracle_up_to < 0) {
        sweep_opt.oracle_up_to = std::min(8, sweep_opt.n_max);
      }
      if (csv || out.format == "csv") {
        out.emit(sweep_csv(sweep_opt.n_min, sweep_opt.n_max));
        return 0;
      }
      const auto summaries = sweep(sweep_opt);
      for (const SweepSummary& s : summaries) {
        std::fprintf(stderr, "sweep n=%d pairs=%llu frobenius=%llu violations=%zu %.3fs\n", s.n,
                     s.pairs_total, s.frobenius_count, s.violations.size(), s.elapsed_seconds);
      }
      out.emit(sweep_payload(summaries));
      return has_conjecture_violation(summaries) ? 3 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << error_payload(error_kind_name(e), e.what()).dump() << "\n";
    return exit_code_for(e);
  }
  return 1;
}
