#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/point_set.hpp"

namespace esakia {

using Relation = std::vector<std::pair<std::size_t, std::size_t>>;

// Level tag of the bottom point added below a ladder truncation.
inline constexpr int kBottomLevel = -1;

// A finite partial order stored as its full reachability relation.
//
// Poset is an immutable handle: copies share the same underlying order, and two
// handles are "the same poset" only when they come from the same validate() call.
// Upsets, colourings and partitions remember their parent by handle identity.
class Poset {
 public:
  // Takes the reflexive-transitive closure of raw_leq, then checks antisymmetry.
  // level_tags, when non-empty, must have one entry per point.
  // Throws EmptyPoset, CycleError, ForeignPoint, InvalidArgument.
  static Poset validate(std::vector<std::string> names, const Relation& raw_leq, std::vector<int> level_tags = {});

  std::size_t size() const;
  const std::string& name(std::size_t x) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t x, std::size_t y) const { return up(x).contains(y); }
  // x↑ and x↓ (both contain x).
  const PointSet& up(std::size_t x) const;
  const PointSet& down(std::size_t x) const;
  // Every point.
  const PointSet& all() const;

  bool has_levels() const;
  int level(std::size_t x) const;
  const std::vector<int>& level_tags() const;
  // Points tagged with the given level, ascending.
  std::vector<std::size_t> level_points(int level) const;
  // Largest non-bottom level tag, or -1 without tags.
  int max_level() const;

  // Full ≤ as (i, j) pairs, sorted.
  Relation relation() const;
  // Cover pairs x ⋖ y, sorted.
  Relation covers() const;

  bool same_as(const Poset& other) const { return data_ == other.data_; }

  // Throws ForeignPoint when s mentions an index >= size().
  void check_members(const PointSet& s) const;

 private:
  struct Data;
  explicit Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// An up-closed subset of a poset.
class Upset {
 public:
  // Throws ForeignPoint, NotAnUpset.
  Upset(Poset parent, PointSet members);

  static Upset empty(const Poset& p);
  static Upset full(const Poset& p);

  const Poset& parent() const { return parent_; }
  const PointSet& members() const { return members_; }
  bool contains(std::size_t x) const { return members_.contains(x); }
  std::size_t count() const { return members_.count(); }

  // Comparing upsets over different posets is an error, not false.
  friend bool operator==(const Upset& a, const Upset& b);

 private:
  struct Trusted {};
  Upset(Trusted, Poset parent, PointSet members) : parent_(std::move(parent)), members_(members) {}
  friend Upset trusted_upset(const Poset& p, const PointSet& s);

  Poset parent_;
  PointSet members_;
};

// Skips the up-closure check; for members already known to be up-closed.
Upset trusted_upset(const Poset& p, const PointSet& s);

bool is_up_closed(const Poset& p, const PointSet& s);
bool is_down_closed(const Poset& p, const PointSet& s);

// S↑ and S↓. Throw ForeignPoint.
Upset up_closure(const Poset& p, const PointSet& s);
PointSet down_closure(const Poset& p, const PointSet& s);

// Raw set forms for hot loops; no membership checks.
PointSet up_set(const Poset& p, const PointSet& s);
PointSet down_set(const Poset& p, const PointSet& s);

// Every upset, sorted ascending in PointSet order. Throws BudgetExceeded when
// there are more than budget.max_upsets.
std::vector<Upset> enumerate_upsets(const Poset& p, const Budget& budget = {});
std::vector<PointSet> enumerate_upset_sets(const Poset& p, const Budget& budget = {});

PointSet maximal_points(const Poset& p);
PointSet minimal_points(const Poset& p);

// Name lookup helper for I/O; throws ForeignPoint on unknown names.
PointSet points_named(const Poset& p, std::span<const std::string> names);

}  // namespace esakia
