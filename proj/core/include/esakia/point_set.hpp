#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace esakia {

inline constexpr std::size_t kMaxPoints = 256;

// Fixed-width subset of {0, ..., kMaxPoints-1}. Ordering is lexicographic on
// the bit-vector read as an unsigned integer with point i weighted 2^i, so the
// empty set is least and {0..n-1} is the greatest subset of an n-point poset.
class PointSet {
 public:
  static constexpr std::size_t kWords = kMaxPoints / 64;

  constexpr PointSet() = default;

  static PointSet single(std::size_t i) {
    PointSet s;
    s.insert(i);
    return s;
  }

  // {0, ..., n-1}
  static PointSet first(std::size_t n) {
    PointSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const PointSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  // One past the largest member, 0 when empty.
  std::size_t extent() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return 0;
  }

  PointSet& operator|=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  // set difference
  PointSet& operator-=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace esakia
