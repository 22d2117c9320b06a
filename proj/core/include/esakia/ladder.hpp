#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/poset.hpp"
#include "esakia/types.hpp"

namespace esakia {

// Finite truncation of the ladder space: levels 0..depth-1 of width 2^n + 1,
// optionally with one point below everything standing in for the limit point.
//
// Point x^l_i (level i, position l) sits below x^{l'}_{i-1} for every l' != l+1,
// and below every point two or more levels up.
struct LadderSpec {
  int n = 0;
  int depth = 1;
  bool with_bottom = true;

  // Throws InvalidArgument for n < 0 or depth < 1, BudgetExceeded past kMaxPoints.
  void validate() const;
  std::size_t width() const { return (std::size_t{1} << n) + 1; }
  std::size_t point_count() const { return width() * static_cast<std::size_t>(depth) + (with_bottom ? 1 : 0); }
};

// Index of x^l_i: level-major, so level 0 occupies 0..width-1. The bottom point is last.
std::size_t ladder_index(const LadderSpec& spec, int level, int position);
std::size_t ladder_bottom_index(const LadderSpec& spec);
std::string ladder_point_name(int level, int position);

// The three generating rules verbatim (no reflexive pairs, no closure).
Relation ladder_rule_relation(const LadderSpec& spec);

Poset build_ladder(const LadderSpec& spec);

// e(l): positions of the 1-bits of l, a subset of {0..n}, injective on 0..2^n.
// For n = 0 the two labels are swapped, e(0) = {0} and e(1) = ∅, so that x^0_0
// and x^0_1 get different types.
std::vector<int> ladder_injection(int n, int position);

// n+1 colours on the top level: c(k) = {x^l_0 : k ∈ e(l)}. Throws InvalidArgument
// when the poset's level 0 does not have width 2^n + 1.
Colouring canonical_colouring(const Poset& ladder, int n);

// The canonical colouring isolates every point of ladder(n, depth, with bottom).
bool verify_canonical(int n, int depth);

// Upsets whose members (other than the full set) lie in levels 0..max_level.
std::vector<PointSet> upsets_supported_in(const Poset& ladder, int max_level, const Budget& budget = {});

struct CollapseReport {
  LadderSpec spec;
  std::size_t colours = 0;
  // ω-classes realised inside each level.
  std::vector<std::size_t> classes_per_level;
  // Least level with two points of the same ω-type.
  std::optional<int> first_merge_level;
  // Least level i meeting the collapse hypotheses: two points of level i share an
  // ω-type and each deeper level is 0-type homogeneous.
  std::optional<int> anchor_level;
  // Least level L such that every point of levels L..depth-1 has one ω-type.
  std::optional<int> collapse_level;
  // collapse_level <= anchor_level + 2^n + 1.
  bool bound_satisfied = false;
};

// Throws SupportTooDeep unless every nontrivial colour lives in levels
// 0..depth-(2^n+3); PosetMismatch when c is over another poset.
CollapseReport collapse_check(const LadderSpec& spec, const Poset& ladder, const Colouring& c);

struct NextLevelReport {
  // Levels i whose hypotheses held (at most 2^n ω-classes at level i, level i+1
  // 0-homogeneous), each checked against |L^{i+1}/~ω| <= |L^i/~ω|.
  std::vector<int> checked_levels;
  std::optional<int> counterexample_level;
  bool holds() const { return !counterexample_level.has_value(); }
};

NextLevelReport next_level_bound_check(const LadderSpec& spec, const Poset& ladder, const Colouring& c);

struct NonColourabilityReport {
  LadderSpec spec;
  std::size_t colours = 0;
  std::size_t upset_count = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t successes = 0;
  std::size_t max_classes = 0;
  std::size_t point_count = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  // First colouring (as upset indices) that isolates every point.
  std::optional<std::vector<std::size_t>> first_success;
  bool holds() const { return successes == 0; }
};

// Every n-tuple of upsets of ladder(n, depth, with bottom) leaves fewer ω-classes
// than points. Throws BudgetExceeded past budget.max_tuples.
NonColourabilityReport exhaustive_non_colourability(int n, int depth, const Budget& budget = {});

// Same over `samples` seeded uniform n-tuples of upsets.
NonColourabilityReport sampled_non_colourability(int n, int depth, std::uint64_t samples, std::uint64_t seed,
                                                 const Budget& budget = {});

}  // namespace esakia
