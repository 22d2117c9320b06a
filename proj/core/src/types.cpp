#include "esakia/types.hpp"

#include <algorithm>
#include <map>

#include "esakia/errors.hpp"
#include "esakia/parallel.hpp"

namespace esakia {

namespace {

// Relabels arbitrary keys to canonical block ids (order of first point).
template <class Key>
std::vector<std::uint32_t> canonical_labels(const std::vector<Key>& keys) {
  std::map<Key, std::uint32_t> ids;
  std::vector<std::uint32_t> out(keys.size());
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [it, inserted] = ids.emplace(keys[x], static_cast<std::uint32_t>(ids.size()));
    out[x] = it->second;
  }
  return out;
}

}  // namespace

Colouring::Colouring(Poset parent, std::vector<Upset> colours) : parent_(std::move(parent)), colours_(std::move(colours)) {
  for (const auto& c : colours_)
    if (!c.parent().same_as(parent_)) throw PosetMismatch();
}

Colouring Colouring::from_sets(const Poset& parent, std::span<const PointSet> colours) {
  std::vector<Upset> out;
  out.reserve(colours.size());
  for (const auto& s : colours) out.emplace_back(parent, s);
  return Colouring(parent, std::move(out));
}

std::vector<PointSet> Colouring::sets() const {
  std::vector<PointSet> out;
  out.reserve(colours_.size());
  for (const auto& c : colours_) out.push_back(c.members());
  return out;
}

TypePartition::TypePartition(Poset parent, std::vector<std::uint32_t> block_of, std::size_t stage)
    : parent_(std::move(parent)), block_of_(canonical_labels(block_of)), stage_(stage) {
  if (block_of_.size() != parent_.size()) throw InvalidArgument("partition must label every point");
  for (auto b : block_of_) block_count_ = std::max<std::size_t>(block_count_, b + 1);
}

std::vector<std::vector<std::size_t>> TypePartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t x = 0; x < block_of_.size(); ++x) out[block_of_[x]].push_back(x);
  return out;
}

bool TypePartition::same_blocks(const TypePartition& other) const {
  if (!parent_.same_as(other.parent_)) throw PosetMismatch();
  return block_of_ == other.block_of_;
}

bool TypePartition::refines(const TypePartition& coarser) const {
  if (!parent_.same_as(coarser.parent_)) throw PosetMismatch();
  std::vector<std::int64_t> image(block_count_, -1);
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    auto& slot = image[block_of_[x]];
    if (slot == -1)
      slot = coarser.block_of_[x];
    else if (slot != coarser.block_of_[x])
      return false;
  }
  return true;
}

TypePartition TypePartition::as_omega(std::size_t stabilized_at) const {
  TypePartition out = *this;
  out.stabilized_at_ = stabilized_at;
  return out;
}

TypePartition initial_partition(const Poset& p, std::span<const PointSet> sets) {
  for (const auto& s : sets) p.check_members(s);
  // Membership vectors can be longer than a PointSet; compare as bool vectors.
  std::vector<std::vector<bool>> keys(p.size(), std::vector<bool>(sets.size()));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t g = 0; g < sets.size(); ++g) keys[x][g] = sets[g].contains(x);
  return TypePartition(p, canonical_labels(keys), 0);
}

TypePartition initial_partition(const Colouring& c) { return initial_partition(c.parent(), c.sets()); }

TypePartition refine_once(const TypePartition& t) {
  if (t.is_omega()) throw InvalidArgument("refine_once needs a finite-stage partition");
  const Poset& p = t.parent();
  std::vector<PointSet> met(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    p.up(x).for_each([&](std::size_t z) { met[x].insert(t.block_of(z)); });
  return TypePartition(p, canonical_labels(met), t.stage() + 1);
}

TypePartition stage_partition(const Poset& p, std::span<const PointSet> sets, std::size_t steps) {
  TypePartition t = initial_partition(p, sets);
  for (std::size_t i = 0; i < steps; ++i) t = refine_once(t);
  return t;
}

TypePartition omega_types(const Poset& p, std::span<const PointSet> sets) {
  TypePartition t = initial_partition(p, sets);
  for (;;) {
    TypePartition next = refine_once(t);
    if (next.same_blocks(t)) return t.as_omega(t.stage());
    t = std::move(next);
  }
}

TypePartition omega_types(const Colouring& c) { return omega_types(c.parent(), c.sets()); }

bool is_isolated(const Colouring& c, std::size_t x) {
  if (x >= c.parent().size()) throw ForeignPoint("point index " + std::to_string(x) + " out of range");
  const auto t = omega_types(c);
  const auto b = t.block_of(x);
  return std::count(t.labels().begin(), t.labels().end(), b) == 1;
}

bool is_coloured(const Poset& p, std::span<const PointSet> sets) { return omega_types(p, sets).is_discrete(); }
bool is_coloured(const Colouring& c) { return omega_types(c).is_discrete(); }

std::size_t count_omega_classes(const Poset& p, std::span<const PointSet> sets) {
  return omega_types(p, sets).block_count();
}
std::size_t count_omega_classes(const Colouring& c) { return omega_types(c).block_count(); }

std::vector<std::size_t> decode_tuple(std::uint64_t t, std::size_t k, std::size_t radix) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = static_cast<std::size_t>(t % radix);
    t /= radix;
  }
  return out;
}

std::optional<std::uint64_t> tuple_count(std::size_t radix, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (radix != 0 && total > cap / radix) return std::nullopt;
    total *= radix;
  }
  if (total > cap) return std::nullopt;
  return total;
}

std::optional<Colouring> find_k_colouring(const Poset& p, std::size_t k, const Budget& budget) {
  const auto upsets = enumerate_upset_sets(p, budget);
  const auto total = tuple_count(upsets.size(), k, budget.max_tuples);
  if (!total)
    throw BudgetExceeded(std::to_string(upsets.size()) + "^" + std::to_string(k) + " colour tuples exceed the budget");

  auto colours_at = [&](std::uint64_t t) {
    std::vector<PointSet> colours;
    colours.reserve(k);
    for (auto i : decode_tuple(t, k, upsets.size())) colours.push_back(upsets[i]);
    return colours;
  };
  const auto hit = parallel_find_first(
      *total, [&](std::uint64_t t) { return is_coloured(p, colours_at(t)); }, budget.threads);
  if (!hit) return std::nullopt;
  return Colouring::from_sets(p, colours_at(*hit));
}

std::size_t min_colours(const Poset& p, const Budget& budget) {
  for (std::size_t k = 0;; ++k)
    if (find_k_colouring(p, k, budget)) return k;
}

}  // namespace esakia
