#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// An ordered list of k upsets c(0), ..., c(k-1) over one poset. k = 0 is allowed.
class Colouring {
 public:
  explicit Colouring(Poset parent) : parent_(std::move(parent)) {}
  // Throws PosetMismatch when a colour belongs to another poset.
  Colouring(Poset parent, std::vector<Upset> colours);
  // Throws ForeignPoint / NotAnUpset.
  static Colouring from_sets(const Poset& parent, std::span<const PointSet> colours);

  const Poset& parent() const { return parent_; }
  std::size_t size() const { return colours_.size(); }
  const Upset& operator[](std::size_t i) const { return colours_.at(i); }
  const std::vector<Upset>& colours() const { return colours_; }
  std::vector<PointSet> sets() const;

 private:
  Poset parent_;
  std::vector<Upset> colours_;
};

// A partition of the points standing for ~_n (finite stage) or ~_ω.
//
// Block ids are canonical: numbered 0, 1, ... in order of each block's least
// point, so two partitions are equal exactly when their id vectors are.
class TypePartition {
 public:
  TypePartition(Poset parent, std::vector<std::uint32_t> block_of, std::size_t stage);

  const Poset& parent() const { return parent_; }
  std::size_t stage() const { return stage_; }
  bool is_omega() const { return stabilized_at_.has_value(); }
  // Least n with ~_n = ~_{n+1}; only set on ω partitions.
  std::optional<std::size_t> stabilized_at() const { return stabilized_at_; }

  std::uint32_t block_of(std::size_t x) const { return block_of_.at(x); }
  const std::vector<std::uint32_t>& labels() const { return block_of_; }
  std::size_t block_count() const { return block_count_; }
  std::vector<std::vector<std::size_t>> blocks() const;
  bool is_discrete() const { return block_count_ == block_of_.size(); }

  // Same blocks (ignores stage metadata). Throws PosetMismatch.
  bool same_blocks(const TypePartition& other) const;
  // Every block of *this lies inside a block of coarser. Throws PosetMismatch.
  bool refines(const TypePartition& coarser) const;

  TypePartition as_omega(std::size_t stabilized_at) const;

 private:
  Poset parent_;
  std::vector<std::uint32_t> block_of_;
  std::size_t block_count_ = 0;
  std::size_t stage_ = 0;
  std::optional<std::size_t> stabilized_at_;
};

// ~_0: points with the same membership vector across the given sets.
TypePartition initial_partition(const Colouring& c);
TypePartition initial_partition(const Poset& p, std::span<const PointSet> sets);

// ~_{n+1} from ~_n: x and y are equivalent iff x↑ and y↑ meet the same set of
// stage-n blocks. Throws InvalidArgument on an ω partition.
TypePartition refine_once(const TypePartition& t);

// refine_once applied `steps` times to the initial partition.
TypePartition stage_partition(const Poset& p, std::span<const PointSet> sets, std::size_t steps);

// Iterates refine_once to the fixpoint. Reached within |P| steps.
TypePartition omega_types(const Colouring& c);
TypePartition omega_types(const Poset& p, std::span<const PointSet> sets);

bool is_isolated(const Colouring& c, std::size_t x);
bool is_coloured(const Colouring& c);
bool is_coloured(const Poset& p, std::span<const PointSet> sets);
std::size_t count_omega_classes(const Colouring& c);
std::size_t count_omega_classes(const Poset& p, std::span<const PointSet> sets);

// Decodes tuple index t into k indices in [0, radix), first colour most significant.
std::vector<std::size_t> decode_tuple(std::uint64_t t, std::size_t k, std::size_t radix);
// radix^k, or nullopt on overflow past cap.
std::optional<std::uint64_t> tuple_count(std::size_t radix, std::size_t k, std::uint64_t cap);

// First k-tuple of upsets (lexicographic over the canonical upset order) whose
// ω-partition is discrete. Throws BudgetExceeded.
std::optional<Colouring> find_k_colouring(const Poset& p, std::size_t k, const Budget& budget = {});

// Least k with a k-colouring. Throws BudgetExceeded.
std::size_t min_colours(const Poset& p, const Budget& budget = {});

}  // namespace esakia
