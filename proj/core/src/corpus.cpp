#include "esakia/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "esakia/errors.hpp"
#include "esakia/random.hpp"

namespace esakia {

namespace {

std::vector<std::string> numbered_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

// Strict order on k points as a k*k bit matrix, bit i*k+j meaning i < j.
using OrderMask = std::uint64_t;

bool transitive(OrderMask m, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> (i * k + j)) & 1U)
        for (std::size_t l = 0; l < k; ++l)
          if (((m >> (j * k + l)) & 1U) && !((m >> (i * k + l)) & 1U)) return false;
  return true;
}

OrderMask canonical_mask(OrderMask m, std::size_t k, const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> (i * k + j)) & 1U) pairs.emplace_back(i, j);
  OrderMask best = ~OrderMask{0};
  for (const auto& perm : perms) {
    OrderMask image = 0;
    for (auto [i, j] : pairs) image |= OrderMask{1} << (perm[i] * k + perm[j]);
    best = std::min(best, image);
  }
  return best;
}

Poset poset_from_mask(OrderMask m, std::size_t k) {
  Relation rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((m >> (i * k + j)) & 1U) rel.emplace_back(i, j);
  return Poset::validate(numbered_names(k), rel);
}

std::uint64_t parse_number(std::string_view text, std::string_view spec) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidArgument("malformed corpus specifier '" + std::string(spec) + "'");
  return value;
}

}  // namespace

std::vector<Poset> posets_up_to_iso(std::size_t points) {
  if (points == 0 || points > 7) throw InvalidArgument("isomorphism-class enumeration supports 1..7 points");
  const std::size_t k = points;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Every poset has a linear extension, so naturally labelled strict orders
  // (i < j only when i < j as integers) reach every isomorphism class.
  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) upper.emplace_back(i, j);
  std::set<OrderMask> classes;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << upper.size()); ++choice) {
    OrderMask m = 0;
    for (std::size_t b = 0; b < upper.size(); ++b)
      if ((choice >> b) & 1U) m |= OrderMask{1} << (upper[b].first * k + upper[b].second);
    if (!transitive(m, k)) continue;
    classes.insert(canonical_mask(m, k, perms));
  }
  std::vector<Poset> out;
  for (auto m : classes) out.push_back(poset_from_mask(m, k));
  return out;
}

std::vector<Poset> exhaustive_posets(std::size_t max_points) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= max_points; ++k) {
    auto level = posets_up_to_iso(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Poset> random_posets(std::size_t count, std::size_t max_points, std::uint64_t seed) {
  if (max_points == 0 || max_points > kMaxPoints) throw InvalidArgument("random poset size out of range");
  std::vector<Poset> out;
  for (std::size_t n = 0; n < count; ++n) {
    Rng rng(mix_seed(seed, n));
    const std::size_t k = 1 + static_cast<std::size_t>(uniform_below(rng, max_points));
    std::vector<std::size_t> label(k);
    std::iota(label.begin(), label.end(), std::size_t{0});
    for (std::size_t i = k; i > 1; --i) std::swap(label[i - 1], label[uniform_below(rng, i)]);
    Relation rel;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (uniform_below(rng, 3) == 0) rel.emplace_back(label[i], label[j]);
    out.push_back(Poset::validate(numbered_names(k), rel));
  }
  return out;
}

std::vector<Poset> corpus_from_spec(std::string_view spec) {
  std::vector<Poset> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string_view item = spec.substr(start, comma - start);
    start = comma + 1;
    if (item.starts_with("exhaustive")) {
      const auto k = parse_number(item.substr(10), item);
      auto part = exhaustive_posets(static_cast<std::size_t>(k));
      out.insert(out.end(), part.begin(), part.end());
    } else if (item.starts_with("random")) {
      const std::string_view rest = item.substr(6);
      const auto c1 = rest.find(':');
      if (c1 == std::string_view::npos) throw InvalidArgument("random corpus needs randomN:S");
      const auto c2 = rest.find(':', c1 + 1);
      const auto count = parse_number(rest.substr(0, c1), item);
      const auto seed = parse_number(rest.substr(c1 + 1, c2 == std::string_view::npos ? std::string_view::npos : c2 - c1 - 1), item);
      const auto max_points = c2 == std::string_view::npos ? 7 : parse_number(rest.substr(c2 + 1), item);
      auto part = random_posets(static_cast<std::size_t>(count), static_cast<std::size_t>(max_points), seed);
      out.insert(out.end(), part.begin(), part.end());
    } else {
      throw InvalidArgument("unknown corpus specifier '" + std::string(item) + "'");
    }
  }
  return out;
}

Poset chain2() { return Poset::validate({"b", "t"}, {{0, 1}}); }

Poset fork_v3() { return Poset::validate({"b", "x", "y"}, {{0, 1}, {0, 2}}); }

Poset antichain(std::size_t k) { return Poset::validate(numbered_names(k), {}); }

Poset single_point() { return Poset::validate({"p0"}, {}); }

}  // namespace esakia
