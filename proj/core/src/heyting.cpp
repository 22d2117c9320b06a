#include "esakia/heyting.hpp"

#include <algorithm>

#include "esakia/errors.hpp"

namespace esakia {

namespace {

void same_parent(const Upset& u, const Upset& v) {
  if (!u.parent().same_as(v.parent())) throw PosetMismatch();
}

}  // namespace

Upset meet(const Upset& u, const Upset& v) {
  same_parent(u, v);
  return trusted_upset(u.parent(), u.members() & v.members());
}

Upset join(const Upset& u, const Upset& v) {
  same_parent(u, v);
  return trusted_upset(u.parent(), u.members() | v.members());
}

Upset implies(const Upset& u, const Upset& v) {
  same_parent(u, v);
  return trusted_upset(u.parent(), implies_set(u.parent(), u.members(), v.members()));
}

Upset neg(const Upset& u) { return implies(u, Upset::empty(u.parent())); }

FiniteHeytingAlgebra::FiniteHeytingAlgebra(std::vector<std::string> labels, std::vector<Element> meet_table,
                                           std::vector<Element> join_table, std::vector<Element> imp_table,
                                           Element bottom, Element top)
    : labels_(std::move(labels)),
      meet_(std::move(meet_table)),
      join_(std::move(join_table)),
      imp_(std::move(imp_table)),
      bottom_(bottom),
      top_(top) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidArgument("algebra must have at least one element");
  const std::size_t area = n * n;
  if (meet_.size() != area || join_.size() != area || imp_.size() != area)
    throw InvalidArgument("operation tables must be size x size");
  if (bottom_ >= n || top_ >= n) throw InvalidArgument("bottom/top outside the algebra");
  auto in_range = [n](Element e) { return e < n; };
  if (!std::all_of(meet_.begin(), meet_.end(), in_range) || !std::all_of(join_.begin(), join_.end(), in_range) ||
      !std::all_of(imp_.begin(), imp_.end(), in_range))
    throw InvalidArgument("operation table entry outside the algebra");
}

std::optional<FiniteHeytingAlgebra::Element> FiniteHeytingAlgebra::element_of(const PointSet& upset) const {
  auto it = std::lower_bound(upsets_.begin(), upsets_.end(), upset);
  if (it == upsets_.end() || *it != upset) return std::nullopt;
  return static_cast<Element>(it - upsets_.begin());
}

void FiniteHeytingAlgebra::check_element(Element a) const {
  if (a >= size())
    throw ForeignElement("element " + std::to_string(a) + " not in an algebra of size " + std::to_string(size()));
}

FiniteHeytingAlgebra algebra_of(const Poset& p, const Budget& budget) {
  auto sets = enumerate_upset_sets(p, budget);
  const std::size_t n = sets.size();
  if (static_cast<std::uint64_t>(n) * n > budget.max_tuples)
    throw BudgetExceeded("operation tables for " + std::to_string(n) + " elements exceed the tuple budget");

  auto lookup = [&](const PointSet& s) {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    return static_cast<FiniteHeytingAlgebra::Element>(it - sets.begin());
  };

  std::vector<FiniteHeytingAlgebra::Element> meet_table(n * n), join_table(n * n), imp_table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet_table[a * n + b] = lookup(sets[a] & sets[b]);
      join_table[a * n + b] = lookup(sets[a] | sets[b]);
      imp_table[a * n + b] = lookup(implies_set(p, sets[a], sets[b]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : sets) labels.push_back(format_points(p, s));

  FiniteHeytingAlgebra alg(std::move(labels), std::move(meet_table), std::move(join_table), std::move(imp_table), 0,
                           static_cast<FiniteHeytingAlgebra::Element>(n - 1));
  alg.poset_ = p;
  alg.upsets_ = std::move(sets);
  return alg;
}

std::string format_points(const Poset& p, const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ',';
    out += p.name(x);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace esakia
