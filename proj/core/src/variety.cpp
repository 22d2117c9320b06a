#include "esakia/variety.hpp"

#include <algorithm>

#include "esakia/errors.hpp"
#include "esakia/ladder.hpp"
#include "esakia/parallel.hpp"
#include "esakia/subalgebra.hpp"

namespace esakia {

std::vector<Element> generated_closure(const FiniteHeytingAlgebra& a, std::span<const Element> gens) {
  std::vector<char> present(a.size(), 0);
  std::vector<Element> queue;
  auto add = [&](Element e) {
    if (present[e]) return;
    present[e] = 1;
    queue.push_back(e);
  };
  add(a.bottom());
  add(a.top());
  for (auto g : gens) {
    a.check_element(g);
    add(g);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element x = queue[i];
      const Element y = queue[j];
      add(a.meet(x, y));
      add(a.join(x, y));
      add(a.implies(x, y));
      add(a.implies(y, x));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::size_t generated_size(const FiniteHeytingAlgebra& a, std::span<const Element> gens) {
  return generated_closure(a, gens).size();
}

namespace {

// C(n, k) capped; nullopt past cap.
std::optional<std::uint64_t> binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

struct SliceBest {
  std::size_t size = 0;
  std::vector<Element> tuple;
};

// Scans tuples t_0 <= t_1 <= ... (or strictly increasing when `distinct`),
// sliced on t_0 for parallel work; the earliest maximum wins.
SliceBest scan_tuples(const FiniteHeytingAlgebra& a, std::size_t k, bool distinct, unsigned threads) {
  const std::size_t n = a.size();
  if (k == 0) return {generated_size(a, {}), {}};
  std::vector<SliceBest> slices(n);
  parallel_for(
      n,
      [&](std::uint64_t first) {
        std::vector<Element> tuple(k, static_cast<Element>(first));
        if (distinct) {
          for (std::size_t i = 1; i < k; ++i) tuple[i] = tuple[i - 1] + 1;
          if (tuple[k - 1] >= n) return;
        }
        SliceBest& best = slices[first];
        for (;;) {
          const std::size_t s = generated_size(a, tuple);
          if (s > best.size) best = {s, tuple};
          // odometer over positions 1..k-1
          std::size_t pos = k;
          while (pos-- > 1) {
            const std::size_t slack = distinct ? k - 1 - pos : 0;
            if (tuple[pos] + 1 + slack < n) break;
          }
          if (pos == 0 || pos >= k) return;
          ++tuple[pos];
          for (std::size_t i = pos + 1; i < k; ++i) tuple[i] = distinct ? tuple[i - 1] + 1 : tuple[i - 1];
        }
      },
      threads);
  SliceBest overall;
  for (auto& s : slices)
    if (s.size > overall.size) overall = std::move(s);
  return overall;
}

}  // namespace

GenerationReport max_k_generated_size(const FiniteHeytingAlgebra& a, std::size_t k, const Budget& budget) {
  const std::size_t n = a.size();
  if (!binomial_capped(n + k - 1, k, budget.max_tuples))
    throw BudgetExceeded("generator multisets of size " + std::to_string(k) + " over " + std::to_string(n) +
                         " elements exceed the tuple budget");
  GenerationReport report;
  report.algebra_size = n;
  report.k = k;
  auto any = scan_tuples(a, k, false, budget.threads);
  report.max_generated_size = any.size;
  report.witness_tuple = std::move(any.tuple);
  if (k <= n) {
    auto distinct = scan_tuples(a, k, true, budget.threads);
    report.max_generated_size_distinct = distinct.size;
    report.distinct_witness = std::move(distinct.tuple);
  }
  return report;
}

FiniteHeytingAlgebra product(const FiniteHeytingAlgebra& a, const FiniteHeytingAlgebra& b, const Budget& budget) {
  const std::uint64_t n = static_cast<std::uint64_t>(a.size()) * b.size();
  if (n > budget.max_upsets || n * n > budget.max_tuples)
    throw BudgetExceeded("product of sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                         " exceeds the budget");
  const auto nb = static_cast<Element>(b.size());
  auto pair = [nb](Element x, Element y) { return x * nb + y; };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  std::vector<Element> meet_table(n * n), join_table(n * n), imp_table(n * n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      const Element px = p / nb, py = p % nb, qx = q / nb, qy = q % nb;
      meet_table[p * n + q] = pair(a.meet(px, qx), b.meet(py, qy));
      join_table[p * n + q] = pair(a.join(px, qx), b.join(py, qy));
      imp_table[p * n + q] = pair(a.implies(px, qx), b.implies(py, qy));
    }
  }
  return FiniteHeytingAlgebra(std::move(labels), std::move(meet_table), std::move(join_table), std::move(imp_table),
                              pair(a.bottom(), b.bottom()), pair(a.top(), b.top()));
}

FiniteHeytingAlgebra trivial_algebra() { return FiniteHeytingAlgebra({"0=1"}, {0}, {0}, {0}, 0, 0); }

FiniteHeytingAlgebra boolean_algebra_2() {
  // 0 → 0 = 1, 0 → 1 = 1, 1 → 0 = 0, 1 → 1 = 1
  return FiniteHeytingAlgebra({"0", "1"}, {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}, 0, 1);
}

std::vector<StrictnessRow> strictness_report(int n, std::span<const int> depths, const Budget& budget) {
  std::vector<StrictnessRow> rows;
  for (int depth : depths) {
    const LadderSpec spec{n, depth, true};
    const Poset ladder = build_ladder(spec);
    const auto upsets = enumerate_upset_sets(ladder, budget);
    const auto k = static_cast<std::size_t>(n);
    if (!binomial_capped(upsets.size() + k - 1, k, budget.max_tuples))
      throw BudgetExceeded("n-tuples of upsets at depth " + std::to_string(depth) + " exceed the tuple budget");

    StrictnessRow row;
    row.depth = depth;
    row.algebra_size = upsets.size();

    // Slice on the first generator; remaining generators are non-decreasing.
    std::vector<std::pair<std::size_t, std::vector<PointSet>>> best(upsets.size());
    auto scan_slice = [&](std::uint64_t first) {
      if (k == 0) return;
      std::vector<std::size_t> idx(k, static_cast<std::size_t>(first));
      for (;;) {
        std::vector<PointSet> gens;
        for (auto i : idx) gens.push_back(upsets[i]);
        const std::size_t s = generate(ladder, gens, budget).size();
        if (s > best[first].first) best[first] = {s, gens};
        std::size_t pos = k;
        while (pos-- > 1)
          if (idx[pos] + 1 < upsets.size()) break;
        if (pos == 0 || pos >= k) return;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1];
      }
    };
    if (k == 0) {
      row.max_generated_size = generate(ladder, std::span<const PointSet>{}, budget).size();
    } else {
      parallel_for(upsets.size(), scan_slice, budget.threads);
      for (auto& [size, gens] : best) {
        if (size > row.max_generated_size) {
          row.max_generated_size = size;
          row.witness = gens;
        }
      }
    }
    const auto canonical = canonical_colouring(ladder, n).sets();
    row.canonical_generates_all = generate(ladder, canonical, budget).size() == upsets.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace esakia
