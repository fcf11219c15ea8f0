#include "seaweed/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <thread>

#include "seaweed/oracle.hpp"

namespace seaweed {

UnbrokenCheck check_unbroken(const SpectrumMultiset& s) {
  if (s.empty()) throw EmptySpectrumError("unbroken check needs a non-empty spectrum");
  const long long min = s.counts.begin()->first;
  const long long max = s.counts.rbegin()->first;
  const bool unbroken = max - min + 1 == static_cast<long long>(s.counts.size());
  return UnbrokenCheck{unbroken, min, max};
}

bool check_symmetric(const SpectrumMultiset& s) {
  if (s.empty()) throw EmptySpectrumError("symmetry check needs a non-empty spectrum");
  for (auto [value, mult] : s.counts) {
    if (s.multiplicity(1 - value) != mult) return false;
  }
  return true;
}

bool check_unimodal(const SpectrumMultiset& s) {
  if (s.empty()) throw EmptySpectrumError("unimodality check needs a non-empty spectrum");
  const long long min = s.counts.begin()->first;
  const long long max = s.counts.rbegin()->first;
  for (long long l = min; l < max; ++l) {
    if (l <= 0 && s.multiplicity(l) > s.multiplicity(l + 1)) return false;
    if (l >= 1 && s.multiplicity(l) < s.multiplicity(l + 1)) return false;
  }
  return true;
}

bool set_unbroken(const std::set<long long>& s) {
  if (s.empty()) return true;
  return *s.rbegin() - *s.begin() + 1 == static_cast<long long>(s.size());
}

namespace {

bool symmetric_or_empty(const SpectrumMultiset& s) { return s.empty() || check_symmetric(s); }
bool unimodal_or_empty(const SpectrumMultiset& s) { return s.empty() || check_unimodal(s); }

SpectrumMultiset contribution_from(const PathMeasures& pm, int first, int last, bool top) {
  SpectrumMultiset out;
  for (int a = first; a <= last; ++a) {
    for (int b = a + 1; b <= last; ++b) out.add(top ? pm.measure(b, a) : pm.measure(a, b));
  }
  out.add(0, (last - first + 1) / 2);
  return out;
}

using IntSet = std::set<long long>;

IntSet sigma_left_set(const PathMeasures& pm, int lo, int hi) {
  IntSet out;
  for (int i = lo; i <= hi; ++i) {
    for (int k = lo; k <= i; ++k) out.insert(pm.measure(i, k));
  }
  return out;
}

IntSet sigma_right_set(const PathMeasures& pm, int lo, int hi) {
  IntSet out;
  for (int i = lo; i <= hi; ++i) {
    for (int k = i; k <= hi; ++k) out.insert(pm.measure(i, k));
  }
  return out;
}

IntSet tau_left_set(const PathMeasures& pm, int lo, int hi) {
  IntSet out;
  for (int i = lo; i <= hi; ++i) out.insert(pm.measure(i, lo));
  return out;
}

IntSet tau_right_set(const PathMeasures& pm, int lo, int hi) {
  IntSet out;
  for (int i = lo; i <= hi; ++i) out.insert(pm.measure(i, hi));
  return out;
}

// sigma(A <- B): measures from B's vertices back to A's.
IntSet sigma_between(const PathMeasures& pm, int a_lo, int a_hi, int b_lo, int b_hi) {
  IntSet out;
  for (int i = a_lo; i <= a_hi; ++i) {
    for (int j = b_lo; j <= b_hi; ++j) out.insert(pm.measure(j, i));
  }
  return out;
}

IntSet shifted(const IntSet& s, long long c) {
  IntSet out;
  for (long long v : s) out.insert(v + c);
  return out;
}

IntSet negated(const IntSet& s) {
  IntSet out;
  for (long long v : s) out.insert(-v);
  return out;
}

IntSet unioned(const IntSet& a, const IntSet& b) {
  IntSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

IntSet setwise_sum(const IntSet& a, const IntSet& b) {
  IntSet out;
  for (long long x : a) {
    for (long long y : b) out.insert(x + y);
  }
  return out;
}

}  // namespace

bool TheoremReport::all_ok() const {
  if (!spectral_checked) return true;
  if (!(unbroken.unbroken && symmetric && centered && blocks_partition_spectrum &&
        simple_magnitudes_ok && simple_routes_agree && unimodal_global && unimodal_blocks)) {
    return false;
  }
  return std::all_of(per_block.begin(), per_block.end(),
                     [](const BlockReport& b) { return b.ok() && b.unimodal; });
}

TheoremReport check_theorem(const SeaweedType& t) {
  TheoremReport r;
  r.type = t;
  const Meander m = build_meander(t);
  const ComponentReport comps = components(m);
  r.frobenius = comps.paths == 1 && comps.cycles == 0;
  r.index = 2 * comps.cycles + comps.paths - 1;
  if (!r.frobenius || t.n() < 2) return r;

  r.spectral_checked = true;
  const DirectedMeander dm = orient(m);
  const PathMeasures pm(dm);
  const SeaweedShape shape = seaweed_shape(t);

  r.spectrum = spectrum_from_measures(pm, shape);
  r.unbroken = check_unbroken(r.spectrum);
  r.symmetric = check_symmetric(r.spectrum);
  r.centered = r.unbroken.min == 1 - r.unbroken.max;
  r.unimodal_global = check_unimodal(r.spectrum);

  SpectrumMultiset combined;
  r.unimodal_blocks = true;
  for (BlockSide side : {BlockSide::Top, BlockSide::Bottom}) {
    const bool top = side == BlockSide::Top;
    const Composition& comp = top ? t.top() : t.bottom();
    for (int index = 1; index <= comp.size(); ++index) {
      auto [first, last] = block_range(t, top, index);
      BlockReport br;
      br.side = side;
      br.index = index;
      br.size = last - first + 1;
      br.contribution = contribution_from(pm, first, last, top);
      br.symmetric = symmetric_or_empty(br.contribution);
      br.sigma_unbroken = set_unbroken(top ? sigma_left_set(pm, first, last)
                                           : sigma_right_set(pm, first, last));
      br.tau_unbroken = set_unbroken(tau_left_set(pm, first, last)) &&
                        set_unbroken(tau_right_set(pm, first, last));
      br.unimodal = unimodal_or_empty(br.contribution);
      r.unimodal_blocks = r.unimodal_blocks && br.unimodal;
      combined = merge(combined, br.contribution);
      r.per_block.push_back(std::move(br));
    }
  }
  r.blocks_partition_spectrum = combined == r.spectrum;

  r.simple_routes_agree = true;
  SimpleEigenvalues simple;
  try {
    simple = simple_eigenvalues(dm);
  } catch (const InternalError&) {
    r.simple_routes_agree = false;
    simple = simple_eigenvalues_by_measure(dm);
  }
  r.simple_magnitudes_ok = true;
  for (const auto& side : {simple.top, simple.bottom}) {
    for (auto [pos, value] : side) {
      const long long mag = value < 0 ? -value : value;
      if (mag < 1 || mag > 3) r.simple_magnitudes_ok = false;
    }
  }
  return r;
}

bool WindupReport::all_hold() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const EquationCheck& e) { return e.holds; });
}

bool windup_equations_applicable(const SeaweedType& t, MoveKind move) {
  if (!windup_applicable(t, move)) return false;
  const int a1 = t.top().parts()[0];
  switch (move) {
    case MoveKind::BlockCreation:
      // The tau identity sums the first block's simple eigenvalues to 1,
      // which is the measure of its outermost arc; a singleton has none.
      return a1 >= 2;
    case MoveKind::RotationExpansion:
      return true;  // a1 > b1 already forces a1 >= 2
    case MoveKind::PureExpansion:
      return a1 >= 2 && t.top().parts()[1] >= 2;
    default:
      return false;
  }
}

WindupReport check_windup_equations(const SeaweedType& t, MoveKind move) {
  if (move != MoveKind::BlockCreation && move != MoveKind::RotationExpansion &&
      move != MoveKind::PureExpansion) {
    throw PreconditionError("equation checks cover block creation, rotation expansion and pure expansion");
  }
  if (!is_frobenius(build_meander(t))) {
    throw PreconditionError("equation checks need a Frobenius type");
  }
  if (!windup_equations_applicable(t, move)) {
    throw PreconditionError("equation hypotheses not met: the blocks the " +
                            std::string(move_name(move)) +
                            " identities reference must have at least two vertices");
  }

  WindupReport report;
  report.from = t;
  report.move = move;
  report.to = wind_up(t, move);

  const PathMeasures pm(directed_meander(t));
  const PathMeasures pm2(directed_meander(report.to));

  auto equal_eq = [&report](std::string name, IntSet lhs, IntSet rhs) {
    const bool holds = lhs == rhs;
    report.equations.push_back(EquationCheck{std::move(name), std::move(lhs), std::move(rhs), holds});
  };
  auto subset_eq = [&report](std::string name, IntSet lhs, IntSet rhs) {
    const bool holds = std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
    report.equations.push_back(EquationCheck{std::move(name), std::move(lhs), std::move(rhs), holds});
  };

  const int a1 = t.top().parts()[0];
  const int b1 = t.bottom().parts()[0];

  switch (move) {
    case MoveKind::BlockCreation: {
      // M: A = first top block. M': A' and B' halve the doubled block.
      const IntSet sA = sigma_left_set(pm, 1, a1);
      const IntSet tA = tau_left_set(pm, 1, a1);
      equal_eq("sigma-left-A'", sigma_left_set(pm2, 1, a1), negated(sA));
      equal_eq("sigma-left-B'", sigma_left_set(pm2, a1 + 1, 2 * a1), sA);
      equal_eq("sigma-A'<-B'", sigma_between(pm2, 1, a1, a1 + 1, 2 * a1),
               unioned(shifted(sA, 1), shifted(negated(sA), 1)));
      equal_eq("tau-left-new-top", tau_left_set(pm2, 1, 2 * a1),
               unioned(shifted(tA, -1), tA));
      equal_eq("bottom-sigma-right", sigma_right_set(pm2, 1, a1), sA);
      equal_eq("bottom-tau-right", tau_right_set(pm2, 1, a1), tA);
      break;
    }
    case MoveKind::RotationExpansion: {
      // M: A = first b1 vertices, B = rest of the first top block.
      // M': A', B' split the new top block's left part, C' extends it.
      const IntSet sA = sigma_left_set(pm, 1, b1);
      const IntSet sB = sigma_left_set(pm, b1 + 1, a1);
      const IntSet sAB = sigma_between(pm, 1, b1, b1 + 1, a1);
      const IntSet sFull = sigma_left_set(pm, 1, a1);
      const IntSet tFull = tau_left_set(pm, 1, a1);
      const int w = a1 - b1;
      equal_eq("sigma-left-A'", sigma_left_set(pm2, 1, w), negated(sB));
      equal_eq("sigma-left-B'", sigma_left_set(pm2, w + 1, a1), negated(sA));
      equal_eq("sigma-A'<-B'", sigma_between(pm2, 1, w, w + 1, a1), negated(sAB));
      equal_eq("sigma-left-C'", sigma_left_set(pm2, a1 + 1, 2 * a1 - b1), sB);
      equal_eq("sigma-A'<-C'", sigma_between(pm2, 1, w, a1 + 1, 2 * a1 - b1),
               unioned(shifted(sB, 1), shifted(negated(sB), 1)));
      equal_eq("sigma-B'<-C'", sigma_between(pm2, w + 1, a1, a1 + 1, 2 * a1 - b1),
               shifted(sAB, 1));
      IntSet s_extra;  // prefix measures m(q, 1) of M for q past the first bottom block
      for (int q = b1 + 1; q <= a1; ++q) s_extra.insert(pm.measure(q, 1));
      equal_eq("tau-left-new-top", tau_left_set(pm2, 1, 2 * a1 - b1),
               unioned(shifted(tFull, -1), s_extra));
      subset_eq("tau-extra-subset", s_extra, tFull);
      equal_eq("bottom-sigma-right", sigma_right_set(pm2, 1, a1), sFull);
      equal_eq("bottom-tau-right", tau_right_set(pm2, 1, a1), tFull);
      break;
    }
    case MoveKind::PureExpansion: {
      // M: A = first top block, B = second. M': C' | A' | B' make up the
      // merged block, with C' and B' copies of B around A'.
      const int a2 = t.top().parts()[1];
      const IntSet sA = sigma_left_set(pm, 1, a1);
      const IntSet sB = sigma_left_set(pm, a1 + 1, a1 + a2);
      const IntSet tA = tau_left_set(pm, 1, a1);
      const IntSet tB = tau_left_set(pm, a1 + 1, a1 + a2);
      report.has_gamma = true;
      report.gamma = pm.measure(a1, a1 + 1);
      const int cp_hi = a2;
      const int ap_hi = a2 + a1;
      const int bp_hi = a1 + 2 * a2;
      equal_eq("sigma-left-B'", sigma_left_set(pm2, ap_hi + 1, bp_hi), sB);
      equal_eq("sigma-left-C'", sigma_left_set(pm2, 1, cp_hi), negated(sB));
      equal_eq("sigma-left-A'", sigma_left_set(pm2, cp_hi + 1, ap_hi), sA);
      equal_eq("sigma-C'<-B'", sigma_between(pm2, 1, cp_hi, ap_hi + 1, bp_hi),
               unioned(shifted(sB, 1), shifted(negated(sB), 1)));
      const IntSet c_from_a = sigma_between(pm2, 1, cp_hi, cp_hi + 1, ap_hi);
      equal_eq("sigma-C'<-A'", c_from_a,
               shifted(setwise_sum(negated(tB), tA), report.gamma));
      equal_eq("sigma-A'<-B'", sigma_between(pm2, cp_hi + 1, ap_hi, ap_hi + 1, bp_hi),
               shifted(negated(c_from_a), 1));
      equal_eq("tau-left-new-top", tau_left_set(pm2, 1, bp_hi),
               unioned(unioned(shifted(tB, -1), shifted(tA, report.gamma - 1)), tB));
      subset_eq("gamma-in-1-2-3", IntSet{report.gamma}, IntSet{1, 2, 3});
      equal_eq("bottom-sigma-right", sigma_right_set(pm2, 1, cp_hi), sB);
      equal_eq("bottom-tau-right", tau_right_set(pm2, 1, cp_hi), tB);
      break;
    }
    default:
      break;
  }
  return report;
}

namespace {

struct LocalResults {
  unsigned long long frobenius_count = 0;
  std::vector<Violation> violations;
};

void check_one(const SeaweedType& t, unsigned long long pair_index, const SweepOptions& opt,
               LocalResults& local) {
  auto flag = [&](const char* check) {
    local.violations.push_back(Violation{pair_index, t, check});
  };
  auto flag_str = [&](std::string check) {
    local.violations.push_back(Violation{pair_index, t, std::move(check)});
  };

  const int n = t.n();
  const Meander m = build_meander(t);
  const ComponentReport comps = components(m);
  const bool frob = comps.paths == 1 && comps.cycles == 0;
  const int gidx = 2 * comps.cycles + comps.paths - 1;
  if (frob) ++local.frobenius_count;

  std::optional<DirectedMeander> dm;
  std::optional<PathMeasures> pm;
  auto walk = [&]() -> const PathMeasures& {
    if (!pm) {
      dm.emplace(orient(m));
      pm.emplace(*dm);
    }
    return *pm;
  };

  if (opt.oracle_up_to >= n) {
    if (oracle_index(t) != gidx) flag("oracle-index");
    if (frob) {
      if (oracle_principal(t).diag != principal_element(orient(m)).diag) flag("oracle-principal");
      if (!(oracle_spectrum(t) == spectrum(t))) flag("oracle-spectrum");
    }
  }

  std::optional<SpectrumMultiset> sp;
  const bool want_blocks = frob && n >= 2 && (opt.spectral_checks || opt.conjecture_checks);
  if (want_blocks) {
    sp = spectrum_from_measures(walk(), seaweed_shape(t));
    const UnbrokenCheck unbroken = check_unbroken(*sp);
    if (opt.spectral_checks) {
      if (!unbroken.unbroken) flag("unbroken");
      if (!check_symmetric(*sp)) flag("symmetric");
      if (unbroken.min != 1 - unbroken.max) flag("centered");
    }
    if (opt.conjecture_checks && !check_unimodal(*sp)) flag("conjecture-unimodal");

    SpectrumMultiset combined;
    for (BlockSide side : {BlockSide::Top, BlockSide::Bottom}) {
      const bool top = side == BlockSide::Top;
      const Composition& comp = top ? t.top() : t.bottom();
      for (int index = 1; index <= comp.size(); ++index) {
        auto [first, last] = block_range(t, top, index);
        const SpectrumMultiset contribution = contribution_from(*pm, first, last, top);
        if (opt.spectral_checks) {
          if (!symmetric_or_empty(contribution)) flag("block-symmetric");
          if (!set_unbroken(top ? sigma_left_set(*pm, first, last)
                                : sigma_right_set(*pm, first, last))) {
            flag("sigma-unbroken");
          }
          if (!set_unbroken(tau_left_set(*pm, first, last)) ||
              !set_unbroken(tau_right_set(*pm, first, last))) {
            flag("tau-unbroken");
          }
        }
        if (opt.conjecture_checks && !unimodal_or_empty(contribution)) {
          flag("conjecture-unimodal-block");
        }
        combined = merge(combined, contribution);
      }
    }
    if (opt.spectral_checks && !(combined == *sp)) flag("block-partition");
  }

  if (opt.simple_checks && frob && n >= 2) {
    walk();
    const SimpleEigenvalues a = simple_eigenvalues_by_measure(*dm);
    bool routes_agree = true;
    try {
      routes_agree = simple_eigenvalues_by_propagation(*dm) == a;
    } catch (const InternalError&) {
      routes_agree = false;
    }
    if (!routes_agree) flag("simple-routes");
    for (const auto& side : {a.top, a.bottom}) {
      for (auto [pos, value] : side) {
        const long long mag = value < 0 ? -value : value;
        if (mag < 1 || mag > 3) {
          flag("simple-magnitude");
          break;
        }
      }
    }
  }

  if (opt.winding_checks) {
    const WindingTrace trace = wind_down_sequence(t);
    if ((trace.outcome == WindingTrace::Outcome::Completed) != frob) flag("winddown-outcome");
    for (const auto& [mv, type] : trace.steps) {
      if (graph_index(build_meander(type)) != gidx) {
        flag("downmove-index");
        break;
      }
    }

    const int a1 = t.top().parts()[0];
    const int b1 = t.bottom().parts()[0];
    for (MoveKind up : {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                        MoveKind::PureExpansion, MoveKind::FlipUp}) {
      if (!windup_applicable(t, up)) continue;
      if (up == MoveKind::FlipUp && a1 <= b1) continue;  // down-step would contract, not flip
      const SeaweedType image = wind_up(t, up);
      if (image.n() > opt.n_max) continue;
      const DownStep down = wind_down_step(image);
      if (down.status != DownStep::Status::Moved || *down.move != inverse(up) ||
          !(*down.next == t)) {
        flag_str(std::string("roundtrip:") + std::string(move_name(up)));
      }
    }

    if (frob) {
      for (MoveKind up : {MoveKind::BlockCreation, MoveKind::RotationExpansion,
                          MoveKind::PureExpansion}) {
        if (!windup_equations_applicable(t, up)) continue;
        if (wind_up(t, up).n() > opt.n_max) continue;
        const WindupReport wr = check_windup_equations(t, up);
        for (const EquationCheck& eq : wr.equations) {
          if (!eq.holds) {
            flag_str(std::string("windup:") + std::string(move_name(up)) + ":" + eq.name);
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<SweepSummary> sweep(const SweepOptions& opt) {
  if (opt.n_min < 1 || opt.n_min > opt.n_max) throw PreconditionError("invalid sweep range");
  if (opt.n_max > kMaxSweepN) {
    throw PreconditionError("sweep cap is n <= " + std::to_string(kMaxSweepN));
  }
  if (opt.oracle_up_to > opt.n_max) {
    throw PreconditionError("oracle bound exceeds the sweep range");
  }

  unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs)
                               : std::max(1u, std::thread::hardware_concurrency());

  std::vector<SweepSummary> summaries;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const auto started = std::chrono::steady_clock::now();
    const std::vector<Composition> comps = all_compositions(n);
    const unsigned long long side = comps.size();
    const unsigned long long pairs_total = side * side;

    std::atomic<unsigned long long> cursor{0};
    const unsigned long long chunk = 256;
    std::vector<LocalResults> partials(jobs);

    auto worker = [&](unsigned id) {
      LocalResults& local = partials[id];
      while (true) {
        const unsigned long long begin = cursor.fetch_add(chunk);
        if (begin >= pairs_total) break;
        const unsigned long long end = std::min(begin + chunk, pairs_total);
        for (unsigned long long idx = begin; idx < end; ++idx) {
          const SeaweedType t(comps[static_cast<size_t>(idx / side)],
                              comps[static_cast<size_t>(idx % side)]);
          try {
            check_one(t, idx, opt, local);
          } catch (const std::exception& e) {
            local.violations.push_back(Violation{idx, t, std::string("exception:") + e.what()});
          }
        }
      }
    };

    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(jobs);
      for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
      for (auto& th : threads) th.join();
    }

    SweepSummary summary;
    summary.n = n;
    summary.pairs_total = pairs_total;
    for (LocalResults& local : partials) {
      summary.frobenius_count += local.frobenius_count;
      summary.violations.insert(summary.violations.end(),
                                std::make_move_iterator(local.violations.begin()),
                                std::make_move_iterator(local.violations.end()));
    }
    std::sort(summary.violations.begin(), summary.violations.end(),
              [](const Violation& a, const Violation& b) {
                if (a.pair_index != b.pair_index) return a.pair_index < b.pair_index;
                return a.check < b.check;
              });
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    summaries.push_back(std::move(summary));
  }
  return summaries;
}

bool has_conjecture_violation(const std::vector<SweepSummary>& summaries) {
  for (const SweepSummary& s : summaries) {
    for (const Violation& v : s.violations) {
      if (v.check.rfind("conjecture-", 0) == 0) return true;
    }
  }
  return false;
}

}  // namespace seaweed
