#pragma once

#include <set>
#include <string>
#include <vector>

#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

struct UnbrokenCheck {
  bool unbroken = false;
  long long min = 0;
  long long max = 0;
};

// True when the support is a contiguous integer interval.
UnbrokenCheck check_unbroken(const SpectrumMultiset& s);

// True when every multiplicity satisfies d(l) == d(1-l).
bool check_symmetric(const SpectrumMultiset& s);

// Multiplicities non-decreasing up to the {0,1} plateau and non-increasing
// after it: d(l) <= d(l+1) for l <= 0 and d(l) >= d(l+1) for l >= 1.
bool check_unimodal(const SpectrumMultiset& s);

bool set_unbroken(const std::set<long long>& s);

struct BlockReport {
  BlockSide side = BlockSide::Top;
  int index = 0;
  int size = 0;
  SpectrumMultiset contribution;
  bool symmetric = true;       // d(l) == d(1-l) within the contribution
  bool sigma_unbroken = true;  // downward set for top blocks, upward for bottom
  bool tau_unbroken = true;    // both anchored sets
  bool unimodal = true;

  bool ok() const { return symmetric && sigma_unbroken && tau_unbroken; }
};

struct TheoremReport {
  SeaweedType type;
  bool frobenius = false;
  int index = 0;
  // Spectral fields below are only populated for Frobenius types with n >= 2.
  bool spectral_checked = false;
  SpectrumMultiset spectrum;
  UnbrokenCheck unbroken;
  bool symmetric = false;
  bool centered = false;  // min == 1 - max
  std::vector<BlockReport> per_block;
  bool blocks_partition_spectrum = false;
  bool simple_magnitudes_ok = false;  // every simple eigenvalue in {1,2,3} by absolute value
  bool simple_routes_agree = false;
  bool unimodal_global = false;
  bool unimodal_blocks = false;

  // Everything the theorem and lemmas assert (the conjecture included).
  bool all_ok() const;
};

TheoremReport check_theorem(const SeaweedType& t);

// One verified identity between measure sets of a meander and its expansion.
// Most checks are equalities; subset-style checks say so in their name.
struct EquationCheck {
  std::string name;
  std::set<long long> lhs;
  std::set<long long> rhs;
  bool holds = false;
};

struct WindupReport {
  SeaweedType from;
  SeaweedType to;
  MoveKind move = MoveKind::BlockCreation;
  bool has_gamma = false;
  long long gamma = 0;
  std::vector<EquationCheck> equations;

  bool all_hold() const;
};

// True when the identities for this move have their hypotheses at t: besides
// the move's own precondition, every block they reference must have an
// outermost arc (Block Creation needs a1 >= 2, Pure Expansion needs a1 >= 2
// and a2 >= 2). At singleton blocks the identities are genuinely false, not
// merely unproven; see the precondition regression tests.
bool windup_equations_applicable(const SeaweedType& t, MoveKind move);

// Verifies the measure-set identities relating a Frobenius meander to its
// image under one expansion move (Block Creation, Rotation Expansion or Pure
// Expansion), each side computed from actual walks on the two meanders.
WindupReport check_windup_equations(const SeaweedType& t, MoveKind move);

struct Violation {
  unsigned long long pair_index = 0;  // position in the n-th enumeration
  SeaweedType type;
  std::string check;

  bool operator==(const Violation&) const = default;
};

struct SweepSummary {
  int n = 0;
  unsigned long long pairs_total = 0;
  unsigned long long frobenius_count = 0;
  std::vector<Violation> violations;  // sorted by (pair_index, check)
  double elapsed_seconds = 0.0;
};

inline constexpr int kMaxSweepN = 14;

struct SweepOptions {
  int n_min = 1;
  int n_max = 8;
  // Exact-arithmetic cross checks run for n up to this bound (0 disables).
  int oracle_up_to = 0;
  // 0 = hardware concurrency.
  int jobs = 0;
  bool spectral_checks = true;    // unbroken/symmetric/centered + per-block sets + partition
  bool simple_checks = true;      // simple-eigenvalue magnitudes and route agreement
  bool winding_checks = true;     // down-sequence outcomes, index preservation, round trips, case equations
  bool conjecture_checks = true;  // unimodality, global and per block
};

// Runs the selected checks over every composition pair for each n in range.
// Workers are pure; results are merged and sorted, so the output does not
// depend on the job count.
std::vector<SweepSummary> sweep(const SweepOptions& opt);

bool has_conjecture_violation(const std::vector<SweepSummary>& summaries);

}  // namespace seaweed
