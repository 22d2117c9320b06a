#include "esakia/ladder.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "esakia/errors.hpp"
#include "esakia/parallel.hpp"
#include "esakia/random.hpp"

namespace esakia {

void LadderSpec::validate() const {
  if (n < 0) throw InvalidArgument("ladder parameter n must be >= 0");
  if (depth < 1) throw InvalidArgument("ladder depth must be >= 1");
  if (n >= 8 || point_count() > kMaxPoints)
    throw BudgetExceeded("ladder(" + std::to_string(n) + ", " + std::to_string(depth) + ") exceeds " +
                         std::to_string(kMaxPoints) + " points");
}

std::size_t ladder_index(const LadderSpec& spec, int level, int position) {
  return static_cast<std::size_t>(level) * spec.width() + static_cast<std::size_t>(position);
}

std::size_t ladder_bottom_index(const LadderSpec& spec) { return spec.width() * static_cast<std::size_t>(spec.depth); }

std::string ladder_point_name(int level, int position) {
  return "x^" + std::to_string(position) + "_" + std::to_string(level);
}

Relation ladder_rule_relation(const LadderSpec& spec) {
  spec.validate();
  const int w = static_cast<int>(spec.width());
  Relation out;
  for (int i = 0; i + 1 < spec.depth; ++i) {
    // x^l_{i+1} ≤ x^{l'}_i for l' ≠ l + 1
    for (int l = 0; l < w; ++l)
      for (int lp = 0; lp < w; ++lp)
        if (lp != l + 1) out.emplace_back(ladder_index(spec, i + 1, l), ladder_index(spec, i, lp));
    // x^l_{i+t} ≤ x^{l'}_i for t ≥ 2
    for (int t = 2; i + t < spec.depth; ++t)
      for (int l = 0; l < w; ++l)
        for (int lp = 0; lp < w; ++lp) out.emplace_back(ladder_index(spec, i + t, l), ladder_index(spec, i, lp));
  }
  if (spec.with_bottom) {
    const auto bottom = ladder_bottom_index(spec);
    for (std::size_t x = 0; x < bottom; ++x) out.emplace_back(bottom, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset build_ladder(const LadderSpec& spec) {
  spec.validate();
  std::vector<std::string> names;
  std::vector<int> levels;
  for (int i = 0; i < spec.depth; ++i) {
    for (int l = 0; l < static_cast<int>(spec.width()); ++l) {
      names.push_back(ladder_point_name(i, l));
      levels.push_back(i);
    }
  }
  if (spec.with_bottom) {
    names.emplace_back("x_inf");
    levels.push_back(kBottomLevel);
  }
  return Poset::validate(std::move(names), ladder_rule_relation(spec), std::move(levels));
}

std::vector<int> ladder_injection(int n, int position) {
  if (n == 0) return position == 0 ? std::vector<int>{0} : std::vector<int>{};
  std::vector<int> out;
  for (int bit = 0; (position >> bit) != 0; ++bit)
    if ((position >> bit) & 1) out.push_back(bit);
  return out;
}

Colouring canonical_colouring(const Poset& ladder, int n) {
  if (n < 0) throw InvalidArgument("ladder parameter n must be >= 0");
  if (!ladder.has_levels()) throw InvalidArgument("canonical colouring needs a ladder poset");
  const auto top = ladder.level_points(0);
  if (n >= 8 || top.size() != (std::size_t{1} << n) + 1)
    throw InvalidArgument("level 0 width does not match 2^n + 1 for n = " + std::to_string(n));
  std::vector<PointSet> colours(static_cast<std::size_t>(n) + 1);
  for (std::size_t l = 0; l < top.size(); ++l)
    for (int k : ladder_injection(n, static_cast<int>(l))) colours[static_cast<std::size_t>(k)].insert(top[l]);
  return Colouring::from_sets(ladder, colours);
}

bool verify_canonical(int n, int depth) {
  const Poset ladder = build_ladder(LadderSpec{n, depth, true});
  return is_coloured(canonical_colouring(ladder, n));
}

std::vector<PointSet> upsets_supported_in(const Poset& ladder, int max_level, const Budget& budget) {
  std::vector<PointSet> out;
  for (const auto& u : enumerate_upset_sets(ladder, budget)) {
    if (u == ladder.all()) {
      out.push_back(u);
      continue;
    }
    bool inside = true;
    u.for_each([&](std::size_t x) { inside = inside && ladder.level(x) != kBottomLevel && ladder.level(x) <= max_level; });
    if (inside) out.push_back(u);
  }
  return out;
}

namespace {

std::vector<std::size_t> classes_per_level(const LadderSpec& spec, const Poset& ladder, const TypePartition& t) {
  std::vector<std::size_t> out;
  for (int i = 0; i < spec.depth; ++i) {
    std::set<std::uint32_t> blocks;
    for (auto x : ladder.level_points(i)) blocks.insert(t.block_of(x));
    out.push_back(blocks.size());
  }
  return out;
}

bool level_homogeneous(const Poset& ladder, const TypePartition& t, int level) {
  const auto pts = ladder.level_points(level);
  return std::all_of(pts.begin(), pts.end(), [&](std::size_t x) { return t.block_of(x) == t.block_of(pts.front()); });
}

void check_ladder(const LadderSpec& spec, const Poset& ladder, const Colouring& c) {
  spec.validate();
  if (!c.parent().same_as(ladder)) throw PosetMismatch();
  if (!ladder.has_levels() || ladder.size() != spec.point_count() || ladder.level_points(0).size() != spec.width())
    throw InvalidArgument("poset does not match the ladder spec");
}

}  // namespace

CollapseReport collapse_check(const LadderSpec& spec, const Poset& ladder, const Colouring& c) {
  check_ladder(spec, ladder, c);
  const int deepest_allowed = spec.depth - static_cast<int>(spec.width()) - 2;
  for (const auto& colour : c.colours()) {
    if (colour.members() == ladder.all() || colour.members().empty()) continue;
    colour.members().for_each([&](std::size_t x) {
      if (ladder.level(x) == kBottomLevel || ladder.level(x) > deepest_allowed)
        throw SupportTooDeep("colour reaches level " + std::to_string(ladder.level(x)) + "; support must end by level " +
                             std::to_string(deepest_allowed));
    });
  }

  CollapseReport report;
  report.spec = spec;
  report.colours = c.size();
  const TypePartition omega = omega_types(c);
  const TypePartition zero = initial_partition(c);
  report.classes_per_level = classes_per_level(spec, ladder, omega);
  const auto width = spec.width();

  for (int i = 0; i < spec.depth; ++i) {
    if (report.classes_per_level[static_cast<std::size_t>(i)] < width) {
      report.first_merge_level = i;
      break;
    }
  }
  for (int i = 0; i < spec.depth && !report.anchor_level; ++i) {
    if (report.classes_per_level[static_cast<std::size_t>(i)] >= width) continue;
    bool deeper_homogeneous = true;
    for (int q = i + 1; q < spec.depth && deeper_homogeneous; ++q) deeper_homogeneous = level_homogeneous(ladder, zero, q);
    if (deeper_homogeneous) report.anchor_level = i;
  }

  const std::uint32_t deep_block = omega.block_of(ladder.level_points(spec.depth - 1).front());
  int collapse = spec.depth;
  for (int i = spec.depth - 1; i >= 0; --i) {
    const auto pts = ladder.level_points(i);
    if (!std::all_of(pts.begin(), pts.end(), [&](std::size_t x) { return omega.block_of(x) == deep_block; })) break;
    collapse = i;
  }
  if (collapse < spec.depth) report.collapse_level = collapse;

  report.bound_satisfied = report.anchor_level && report.collapse_level &&
                           *report.collapse_level <= *report.anchor_level + static_cast<int>(width);
  return report;
}

NextLevelReport next_level_bound_check(const LadderSpec& spec, const Poset& ladder, const Colouring& c) {
  check_ladder(spec, ladder, c);
  const TypePartition omega = omega_types(c);
  const TypePartition zero = initial_partition(c);
  const auto classes = classes_per_level(spec, ladder, omega);
  const std::size_t cap = std::size_t{1} << spec.n;

  NextLevelReport report;
  for (int i = 0; i + 1 < spec.depth; ++i) {
    const auto here = classes[static_cast<std::size_t>(i)];
    if (here > cap || !level_homogeneous(ladder, zero, i + 1)) continue;
    report.checked_levels.push_back(i);
    if (classes[static_cast<std::size_t>(i) + 1] > here) {
      report.counterexample_level = i;
      break;
    }
  }
  return report;
}

namespace {

NonColourabilityReport scan_colourings(std::uint64_t total, const Budget& budget,
                                       const std::function<std::vector<std::size_t>(std::uint64_t)>& tuple_at,
                                       NonColourabilityReport report, const std::vector<PointSet>& upsets,
                                       const Poset& ladder) {
  std::vector<std::size_t> classes(total);
  parallel_for(
      total,
      [&](std::uint64_t t) {
        std::vector<PointSet> colours;
        for (auto i : tuple_at(t)) colours.push_back(upsets[i]);
        classes[t] = count_omega_classes(ladder, colours);
      },
      budget.threads);
  report.tuples_checked = total;
  for (std::uint64_t t = 0; t < total; ++t) {
    report.max_classes = std::max(report.max_classes, classes[t]);
    if (classes[t] == ladder.size()) {
      ++report.successes;
      if (!report.first_success) report.first_success = tuple_at(t);
    }
  }
  return report;
}

}  // namespace

NonColourabilityReport exhaustive_non_colourability(int n, int depth, const Budget& budget) {
  const LadderSpec spec{n, depth, true};
  const Poset ladder = build_ladder(spec);
  const auto upsets = enumerate_upset_sets(ladder, budget);
  const auto k = static_cast<std::size_t>(n);
  const auto total = tuple_count(upsets.size(), k, budget.max_tuples);
  if (!total)
    throw BudgetExceeded(std::to_string(upsets.size()) + "^" + std::to_string(n) +
                         " colourings exceed the tuple budget; use sampled mode");
  NonColourabilityReport report;
  report.spec = spec;
  report.colours = k;
  report.upset_count = upsets.size();
  report.point_count = ladder.size();
  return scan_colourings(
      *total, budget, [&](std::uint64_t t) { return decode_tuple(t, k, upsets.size()); }, report, upsets,
      ladder);
}

NonColourabilityReport sampled_non_colourability(int n, int depth, std::uint64_t samples, std::uint64_t seed,
                                                 const Budget& budget) {
  const LadderSpec spec{n, depth, true};
  const Poset ladder = build_ladder(spec);
  const auto upsets = enumerate_upset_sets(ladder, budget);
  if (samples > budget.max_tuples) throw BudgetExceeded("sample count exceeds the tuple budget");
  const auto k = static_cast<std::size_t>(n);
  NonColourabilityReport report;
  report.spec = spec;
  report.colours = k;
  report.upset_count = upsets.size();
  report.point_count = ladder.size();
  report.sampled = true;
  report.seed = seed;
  return scan_colourings(
      samples, budget,
      [&](std::uint64_t t) {
        Rng rng(mix_seed(seed, t));
        std::vector<std::size_t> tuple(k);
        for (auto& i : tuple) i = static_cast<std::size_t>(uniform_below(rng, upsets.size()));
        return tuple;
      },
      report, upsets, ladder);
}

}  // namespace esakia
