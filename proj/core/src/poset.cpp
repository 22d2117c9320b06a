#include "esakia/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "esakia/errors.hpp"

namespace esakia {

struct Poset::Data {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<PointSet> up;
  std::vector<PointSet> down;
  PointSet all;
  std::vector<int> levels;
};

Poset Poset::validate(std::vector<std::string> names, const Relation& raw_leq, std::vector<int> level_tags) {
  const std::size_t n = names.size();
  if (n == 0) throw EmptyPoset();
  if (n > kMaxPoints)
    throw InvalidArgument("poset has " + std::to_string(n) + " points; at most " + std::to_string(kMaxPoints) +
                          " supported");
  if (!level_tags.empty() && level_tags.size() != n)
    throw InvalidArgument("level tags must cover every point");

  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < n; ++i) {
    if (!data->index.emplace(names[i], i).second) throw InvalidArgument("duplicate point name '" + names[i] + "'");
  }

  data->up.resize(n);
  for (std::size_t i = 0; i < n; ++i) data->up[i].insert(i);
  for (const auto& [a, b] : raw_leq) {
    if (a >= n || b >= n) throw ForeignPoint("relation mentions point index outside 0.." + std::to_string(n - 1));
    data->up[a].insert(b);
  }
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    const PointSet row_k = data->up[k];
    for (std::size_t i = 0; i < n; ++i)
      if (data->up[i].contains(k)) data->up[i] |= row_k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (data->up[i].contains(j) && data->up[j].contains(i))
        throw CycleError("order cycle between '" + names[i] + "' and '" + names[j] + "'");
    }
  }

  data->down.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    data->up[i].for_each([&](std::size_t j) { data->down[j].insert(i); });
  data->all = PointSet::first(n);
  data->names = std::move(names);
  data->levels = std::move(level_tags);
  return Poset(std::move(data));
}

std::size_t Poset::size() const { return data_->names.size(); }
const std::string& Poset::name(std::size_t x) const { return data_->names.at(x); }

std::optional<std::size_t> Poset::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

const PointSet& Poset::up(std::size_t x) const { return data_->up[x]; }
const PointSet& Poset::down(std::size_t x) const { return data_->down[x]; }
const PointSet& Poset::all() const { return data_->all; }

bool Poset::has_levels() const { return !data_->levels.empty(); }

int Poset::level(std::size_t x) const {
  if (data_->levels.empty()) throw InvalidArgument("poset carries no level tags");
  return data_->levels.at(x);
}

const std::vector<int>& Poset::level_tags() const { return data_->levels; }

std::vector<std::size_t> Poset::level_points(int level) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data_->levels.size(); ++i)
    if (data_->levels[i] == level) out.push_back(i);
  return out;
}

int Poset::max_level() const {
  int m = -1;
  for (int l : data_->levels) m = std::max(m, l);
  return m;
}

Relation Poset::relation() const {
  Relation out;
  for (std::size_t i = 0; i < size(); ++i) up(i).for_each([&](std::size_t j) { out.emplace_back(i, j); });
  return out;
}

Relation Poset::covers() const {
  Relation out;
  for (std::size_t i = 0; i < size(); ++i) {
    PointSet strict = up(i);
    strict.erase(i);
    // y covers i when nothing strictly between: y ∉ up(z) for any z in strict \ {y}
    PointSet reachable_through;
    strict.for_each([&](std::size_t z) {
      PointSet above = up(z);
      above.erase(z);
      reachable_through |= above;
    });
    (strict - reachable_through).for_each([&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

void Poset::check_members(const PointSet& s) const {
  if (s.extent() > size())
    throw ForeignPoint("point index " + std::to_string(s.extent() - 1) + " is not in a poset of " +
                       std::to_string(size()) + " points");
}

Upset::Upset(Poset parent, PointSet members) : parent_(std::move(parent)), members_(members) {
  parent_.check_members(members_);
  if (!is_up_closed(parent_, members_)) throw NotAnUpset("point set is not up-closed");
}

Upset Upset::empty(const Poset& p) { return trusted_upset(p, PointSet{}); }
Upset Upset::full(const Poset& p) { return trusted_upset(p, p.all()); }

bool operator==(const Upset& a, const Upset& b) {
  if (!a.parent_.same_as(b.parent_)) throw PosetMismatch();
  return a.members_ == b.members_;
}

Upset trusted_upset(const Poset& p, const PointSet& s) { return Upset(Upset::Trusted{}, p, s); }

bool is_up_closed(const Poset& p, const PointSet& s) { return up_set(p, s) == s; }
bool is_down_closed(const Poset& p, const PointSet& s) { return down_set(p, s) == s; }

PointSet up_set(const Poset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](std::size_t x) { out |= p.up(x); });
  return out;
}

PointSet down_set(const Poset& p, const PointSet& s) {
  PointSet out;
  s.for_each([&](std::size_t x) { out |= p.down(x); });
  return out;
}

Upset up_closure(const Poset& p, const PointSet& s) {
  p.check_members(s);
  return trusted_upset(p, up_set(p, s));
}

PointSet down_closure(const Poset& p, const PointSet& s) {
  p.check_members(s);
  return down_set(p, s);
}

std::vector<PointSet> enumerate_upset_sets(const Poset& p, const Budget& budget) {
  const std::size_t n = p.size();
  // Points above x come before x, so deciding x only needs the decided prefix.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.up(a).count() < p.up(b).count(); });
  std::vector<PointSet> strictly_above(n);
  for (std::size_t x = 0; x < n; ++x) {
    strictly_above[x] = p.up(x);
    strictly_above[x].erase(x);
  }

  std::vector<PointSet> out;
  auto visit = [&](auto&& self, std::size_t depth, PointSet current) -> void {
    if (depth == n) {
      if (out.size() >= budget.max_upsets)
        throw BudgetExceeded("more than " + std::to_string(budget.max_upsets) + " upsets");
      out.push_back(current);
      return;
    }
    const std::size_t x = order[depth];
    self(self, depth + 1, current);
    if (strictly_above[x].is_subset_of(current)) {
      current.insert(x);
      self(self, depth + 1, current);
    }
  };
  visit(visit, 0, PointSet{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Upset> enumerate_upsets(const Poset& p, const Budget& budget) {
  std::vector<Upset> out;
  for (const auto& s : enumerate_upset_sets(p, budget)) out.push_back(trusted_upset(p, s));
  return out;
}

PointSet maximal_points(const Poset& p) {
  PointSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.up(x).count() == 1) out.insert(x);
  return out;
}

PointSet minimal_points(const Poset& p) {
  PointSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.down(x).count() == 1) out.insert(x);
  return out;
}

PointSet points_named(const Poset& p, std::span<const std::string> names) {
  PointSet out;
  for (const auto& name : names) {
    auto idx = p.index_of(name);
    if (!idx) throw ForeignPoint("unknown point '" + name + "'");
    out.insert(*idx);
  }
  return out;
}

}  // namespace esakia
