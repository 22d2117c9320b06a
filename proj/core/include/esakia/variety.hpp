#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/heyting.hpp"

namespace esakia {

using Element = FiniteHeytingAlgebra::Element;

// Closure of gens ∪ {0, 1} under the three operation tables, sorted.
// Throws ForeignElement.
std::vector<Element> generated_closure(const FiniteHeytingAlgebra& a, std::span<const Element> gens);
std::size_t generated_size(const FiniteHeytingAlgebra& a, std::span<const Element> gens);

struct GenerationReport {
  std::size_t algebra_size = 0;
  std::size_t k = 0;
  // Max |⟨x_0..x_{k-1}⟩| over k-tuples with repetition allowed.
  std::size_t max_generated_size = 0;
  std::vector<Element> witness_tuple;
  // Same over k-element subsets (distinct generators); absent when k > |A|.
  std::optional<std::size_t> max_generated_size_distinct;
  std::vector<Element> distinct_witness;

  // Every k-generated subalgebra has at most bound elements.
  bool satisfies_bound(std::size_t bound) const { return max_generated_size <= bound; }
};

// Exact scan. Tuples are visited as non-decreasing sequences, which covers every
// generator multiset once; witnesses are the first maxima in that order.
// Throws BudgetExceeded when the multiset count exceeds budget.max_tuples.
GenerationReport max_k_generated_size(const FiniteHeytingAlgebra& a, std::size_t k, const Budget& budget = {});

// Componentwise algebra on pairs; pair (x, y) is element x * |B| + y.
// Throws BudgetExceeded when |A|·|B| squared exceeds budget.max_tuples.
FiniteHeytingAlgebra product(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b, const Budget& budget = {});

// One-element and two-element algebras.
FiniteHeytingAlgebra trivial_algebra();
FiniteHeytingAlgebra boolean_algebra_2();

struct StrictnessRow {
  int depth = 0;
  std::size_t algebra_size = 0;
  // Max |⟨G⟩| over n-tuples of upsets of the truncation.
  std::size_t max_generated_size = 0;
  std::vector<PointSet> witness;
  bool canonical_generates_all = false;
};

// For each depth d: the upset algebra of ladder(n, d, with bottom), its largest
// n-generated subalgebra, and whether the canonical (n+1)-colouring generates it.
std::vector<StrictnessRow> strictness_report(int n, std::span<const int> depths, const Budget& budget = {});

}  // namespace esakia
