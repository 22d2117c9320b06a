#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// One node of a witness term. Operands are element ids of the same
// RankedAlgebra, always smaller than the node's own id, so terms form a DAG.
struct Term {
  enum class Kind : std::uint8_t { Zero, One, Generator, Meet, Join, Implies };
  Kind kind = Kind::Zero;
  std::uint32_t generator = 0;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
};

// The subalgebra ⟨G⟩ of Up(P) built stratum by stratum:
//   S_0     = lattice closure of G ∪ {∅, ⊤}
//   S_{n+1} = lattice closure of S_n ∪ {α → β : α, β ∈ S_n}
// Each element records the stratum where it first appears (its implication
// rank) and a witness term of that rank.
class RankedAlgebra {
 public:
  const Poset& parent() const { return parent_; }
  const std::vector<PointSet>& generators() const { return generators_; }

  std::size_t size() const { return elements_.size(); }
  // Elements in discovery order; ids index rank() and witness().
  const std::vector<PointSet>& elements() const { return elements_; }
  std::size_t rank(std::size_t id) const { return ranks_.at(id); }
  const Term& witness(std::size_t id) const { return terms_.at(id); }
  std::optional<std::size_t> id_of(const PointSet& s) const;

  // Index of the last stratum; S_n = S_last for every n >= last.
  std::size_t last_stratum() const { return stratum_sizes_.size() - 1; }
  // |S_n| for n = 0..last.
  const std::vector<std::size_t>& stratum_sizes() const { return stratum_sizes_; }
  // S_n sorted ascending (n may exceed last_stratum()).
  std::vector<PointSet> stratum(std::size_t n) const;
  bool closed() const { return closed_; }

  // Least n with U ∈ S_n, or nullopt when U ∉ ⟨G⟩. Throws PosetMismatch.
  std::optional<std::size_t> rank_of(const Upset& u) const;

  // Prefix form: 0, 1, g<i>, (and a b), (or a b), (-> a b).
  std::string witness_text(std::size_t id) const;
  // Implication rank of the witness term, computed from its structure.
  std::size_t witness_rank(std::size_t id) const;
  // Evaluates the witness term with the upset operations.
  Upset evaluate_witness(std::size_t id) const;

 private:
  friend RankedAlgebra generate(const Poset& p, std::span<const PointSet> generators, const Budget& budget);

  explicit RankedAlgebra(Poset parent) : parent_(std::move(parent)) {}

  Poset parent_;
  std::vector<PointSet> generators_;
  std::vector<PointSet> elements_;
  std::vector<std::size_t> ranks_;
  std::vector<Term> terms_;
  std::map<PointSet, std::size_t> ids_;
  std::vector<std::size_t> stratum_sizes_;
  bool closed_ = false;
};

// Smallest superset of s ∪ {∅, ⊤} closed under ∩ and ∪, sorted. Throws BudgetExceeded.
std::vector<PointSet> lattice_closure(const Poset& p, std::span<const PointSet> s, const Budget& budget = {});

// Throws ForeignPoint, NotAnUpset, BudgetExceeded.
RankedAlgebra generate(const Poset& p, std::span<const PointSet> generators, const Budget& budget = {});
RankedAlgebra generate(const Poset& p, std::span<const Upset> generators, const Budget& budget = {});

// ~^G_n equals the partition by membership in the rank-≤n elements of ⟨G⟩.
bool check_rank_type_lemma(const Poset& p, std::span<const PointSet> generators, std::size_t n,
                           const Budget& budget = {});

struct DualityCheck {
  bool generates_all = false;  // ⟨G⟩ = Up(P)
  bool coloured = false;       // P is G-coloured
  std::size_t generated_size = 0;
  std::size_t upset_count = 0;
  bool holds() const { return generates_all == coloured; }
};

DualityCheck check_duality_theorem(const Poset& p, std::span<const PointSet> generators, const Budget& budget = {});

}  // namespace esakia
