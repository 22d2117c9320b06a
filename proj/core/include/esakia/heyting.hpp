#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// Lattice and Heyting operations on upsets. All throw PosetMismatch when the
// operands come from different posets.
Upset meet(const Upset& u, const Upset& v);
Upset join(const Upset& u, const Upset& v);
// U → V = ((U \ V)↓)^c, the largest upset W with W ∩ U ⊆ V.
Upset implies(const Upset& u, const Upset& v);
Upset neg(const Upset& u);

// Raw form of implies for hot loops.
inline PointSet implies_set(const Poset& p, const PointSet& u, const PointSet& v) {
  return p.all() - down_set(p, u - v);
}

// A finite Heyting algebra given by full operation tables.
//
// Elements are dense indices. Algebras built from a poset also keep the upset
// behind each element (sorted ascending); products only carry labels.
class FiniteHeytingAlgebra {
 public:
  using Element = std::uint32_t;

  // Throws InvalidArgument when table shapes or bottom/top are inconsistent.
  FiniteHeytingAlgebra(std::vector<std::string> labels, std::vector<Element> meet_table,
                       std::vector<Element> join_table, std::vector<Element> imp_table, Element bottom, Element top);

  std::size_t size() const { return labels_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element implies(Element a, Element b) const { return imp_[index(a, b)]; }
  Element neg(Element a) const { return implies(a, bottom_); }
  // Lattice order induced by meet.
  bool leq(Element a, Element b) const { return meet(a, b) == a; }

  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<Element>& meet_table() const { return meet_; }
  const std::vector<Element>& join_table() const { return join_; }
  const std::vector<Element>& imp_table() const { return imp_; }

  // Present only for algebras built by algebra_of.
  const std::optional<Poset>& poset() const { return poset_; }
  const std::vector<PointSet>& upsets() const { return upsets_; }
  std::optional<Element> element_of(const PointSet& upset) const;

  // Throws ForeignElement.
  void check_element(Element a) const;

 private:
  friend FiniteHeytingAlgebra algebra_of(const Poset& p, const Budget& budget);

  std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * labels_.size() + b; }

  std::vector<std::string> labels_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> imp_;
  Element bottom_;
  Element top_;
  std::optional<Poset> poset_;
  std::vector<PointSet> upsets_;
};

// Up(P) with ∩, ∪ and the upset implication. Elements follow enumerate_upsets
// order, so bottom is 0 and top is size-1. Throws BudgetExceeded when the upset
// count exceeds max_upsets or the table area exceeds max_tuples.
FiniteHeytingAlgebra algebra_of(const Poset& p, const Budget& budget = {});

// Label for a point set: "{name,name}" in index order.
std::string format_points(const Poset& p, const PointSet& s);

}  // namespace esakia
