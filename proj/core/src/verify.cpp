#include "esakia/verify.hpp"

#include <map>

#include "esakia/corpus.hpp"
#include "esakia/errors.hpp"
#include "esakia/heyting.hpp"
#include "esakia/ladder.hpp"
#include "esakia/random.hpp"
#include "esakia/subalgebra.hpp"
#include "esakia/types.hpp"
#include "esakia/variety.hpp"

namespace esakia {

Json verify_result_to_json(const VerifyResult& r) {
  Json j;
  j["check"] = r.name;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["details"] = r.details;
  j["counterexample"] = r.counterexample;
  return j;
}

std::vector<std::vector<PointSet>> sample_generator_sets(const std::vector<PointSet>& upsets, std::size_t count,
                                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<PointSet>> out;
  for (std::size_t s = 0; s < count; ++s) {
    const auto size = uniform_below(rng, 3);
    std::vector<PointSet> gens;
    for (std::uint64_t i = 0; i < size; ++i) {
      const PointSet& g = upsets[uniform_below(rng, upsets.size())];
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    out.push_back(std::move(gens));
  }
  return out;
}

namespace {

Json sets_to_json(std::span<const PointSet> sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(point_set_to_json(s));
  return out;
}

// Calls f(poset, upsets, generator_sets) for every corpus poset.
template <class F>
void for_each_sampled_instance(const VerifyConfig& cfg, F&& f) {
  const auto corpus = corpus_from_spec(cfg.corpus);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto upsets = enumerate_upset_sets(corpus[i], cfg.budget);
    const auto gens = sample_generator_sets(upsets, cfg.generator_samples, mix_seed(cfg.seed, i));
    if (!f(corpus[i], upsets, gens)) return;
  }
}

int default_n(const VerifyConfig& cfg, int fallback) { return cfg.n.value_or(fallback); }

}  // namespace

VerifyResult verify_residuation(const VerifyConfig& cfg) {
  VerifyResult r{.name = "residuation"};
  const auto corpus = corpus_from_spec(cfg.corpus);
  std::size_t posets = 0;
  for (const auto& p : corpus) {
    ++posets;
    const auto upsets = enumerate_upset_sets(p, cfg.budget);
    for (const auto& a : upsets) {
      for (const auto& b : upsets) {
        for (const auto& c : upsets) {
          ++r.checked;
          const bool lhs = (a & b).is_subset_of(c);
          const bool rhs = a.is_subset_of(implies_set(p, b, c));
          const bool distributive = (a & (b | c)) == ((a & b) | (a & c));
          if (lhs != rhs || !distributive) {
            r.passed = false;
            r.counterexample = {{"poset", poset_to_json(p)},
                                {"a", point_set_to_json(a)},
                                {"b", point_set_to_json(b)},
                                {"c", point_set_to_json(c)},
                                {"residuation", lhs == rhs},
                                {"distributivity", distributive}};
            r.details = {{"posets", posets}};
            return r;
          }
        }
      }
    }
  }
  r.details = {{"posets", posets}, {"corpus", cfg.corpus}};
  return r;
}

VerifyResult verify_rank_type(const VerifyConfig& cfg) {
  VerifyResult r{.name = "rank-type"};
  std::size_t instances = 0;
  for_each_sampled_instance(cfg, [&](const Poset& p, const std::vector<PointSet>&, const auto& gen_sets) {
    for (const auto& gens : gen_sets) {
      ++instances;
      const RankedAlgebra ra = generate(p, gens, cfg.budget);
      TypePartition t = initial_partition(p, gens);
      for (std::size_t n = 0; n <= cfg.max_stage; ++n) {
        if (n > 0) t = refine_once(t);
        ++r.checked;
        const auto by_rank = initial_partition(p, ra.stratum(n));
        if (!t.same_blocks(by_rank)) {
          r.passed = false;
          r.counterexample = {{"poset", poset_to_json(p)},
                              {"generators", sets_to_json(gens)},
                              {"stage", n},
                              {"type_partition", partition_to_json(t)},
                              {"rank_partition", partition_to_json(by_rank)}};
          return false;
        }
      }
    }
    return true;
  });
  r.details = {{"corpus", cfg.corpus}, {"seed", cfg.seed}, {"instances", instances}, {"max_stage", cfg.max_stage}};
  return r;
}

VerifyResult verify_duality(const VerifyConfig& cfg) {
  VerifyResult r{.name = "duality"};
  std::size_t generating = 0;
  std::size_t coloured = 0;
  for_each_sampled_instance(cfg, [&](const Poset& p, const std::vector<PointSet>& upsets, const auto& gen_sets) {
    for (const auto& gens : gen_sets) {
      ++r.checked;
      const bool all = generate(p, gens, cfg.budget).size() == upsets.size();
      const auto omega = omega_types(p, gens);
      generating += all ? 1 : 0;
      coloured += omega.is_discrete() ? 1 : 0;
      if (all != omega.is_discrete()) {
        r.passed = false;
        r.counterexample = {{"poset", poset_to_json(p)},
                            {"generators", sets_to_json(gens)},
                            {"generates_all", all},
                            {"coloured", omega.is_discrete()},
                            {"omega_partition", partition_to_json(omega)}};
        return false;
      }
    }
    return true;
  });
  r.details = {{"corpus", cfg.corpus}, {"seed", cfg.seed}, {"generating_instances", generating},
               {"coloured_instances", coloured}};
  return r;
}

VerifyResult verify_oracle_agreement(const VerifyConfig& cfg) {
  VerifyResult r{.name = "oracle"};
  for_each_sampled_instance(cfg, [&](const Poset& p, const std::vector<PointSet>&, const auto& gen_sets) {
    const FiniteHeytingAlgebra alg = algebra_of(p, cfg.budget);
    for (const auto& gens : gen_sets) {
      ++r.checked;
      std::vector<Element> ids;
      for (const auto& g : gens) ids.push_back(*alg.element_of(g));
      const std::size_t by_tables = generated_size(alg, ids);
      const std::size_t by_strata = generate(p, gens, cfg.budget).size();
      if (by_tables != by_strata) {
        r.passed = false;
        r.counterexample = {{"poset", poset_to_json(p)},
                            {"generators", sets_to_json(gens)},
                            {"table_closure_size", by_tables},
                            {"stratified_size", by_strata}};
        return false;
      }
    }
    return true;
  });
  r.details = {{"corpus", cfg.corpus}, {"seed", cfg.seed}};
  return r;
}

VerifyResult verify_canonical_colourings(const VerifyConfig& cfg) {
  VerifyResult r{.name = "canonical"};
  std::vector<std::pair<int, int>> plan;  // (n, max depth)
  if (cfg.n) {
    plan.emplace_back(*cfg.n, cfg.depth.value_or(8));
  } else {
    plan = {{0, 8}, {1, 8}, {2, 6}};
  }
  Json runs = Json::array();
  for (auto [n, max_depth] : plan) {
    for (int depth = 1; depth <= max_depth; ++depth) {
      ++r.checked;
      const bool ok = verify_canonical(n, depth);
      runs.push_back({{"n", n}, {"depth", depth}, {"coloured", ok}});
      if (!ok && r.passed) {
        r.passed = false;
        const Poset ladder = build_ladder(LadderSpec{n, depth, true});
        const Colouring c = canonical_colouring(ladder, n);
        r.counterexample = {{"poset", poset_to_json(ladder)},
                            {"colouring", colouring_to_json(c)},
                            {"omega_partition", partition_to_json(omega_types(c))}};
      }
    }
  }
  r.details = {{"runs", std::move(runs)}};
  return r;
}

VerifyResult verify_non_colourable(const VerifyConfig& cfg) {
  VerifyResult r{.name = "non-colourable"};
  const int n = default_n(cfg, 1);
  const int depth = cfg.depth.value_or(4);
  const auto report = cfg.samples == 0 ? exhaustive_non_colourability(n, depth, cfg.budget)
                                       : sampled_non_colourability(n, depth, cfg.samples, cfg.seed, cfg.budget);
  r.checked = report.tuples_checked;
  r.passed = report.holds();
  r.details = non_colourability_to_json(report);
  if (!r.passed) {
    const Poset ladder = build_ladder(report.spec);
    const auto upsets = enumerate_upset_sets(ladder, cfg.budget);
    std::vector<PointSet> colours;
    for (auto i : *report.first_success) colours.push_back(upsets[i]);
    r.counterexample = {{"poset", poset_to_json(ladder)},
                        {"colouring", sets_to_json(colours)},
                        {"omega_partition", partition_to_json(omega_types(ladder, colours))}};
  }
  return r;
}

VerifyResult verify_collapse(const VerifyConfig& cfg) {
  VerifyResult r{.name = "collapse"};
  const std::vector<int> ns = cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{1, 2};
  const std::uint64_t samples = cfg.samples == 0 ? 100 : cfg.samples;
  Json per_n = Json::array();
  for (int n : ns) {
    const LadderSpec spec{n, cfg.depth.value_or((1 << n) + 6), true};
    const Poset ladder = build_ladder(spec);
    const auto pool = upsets_supported_in(ladder, cfg.support_levels - 1, cfg.budget);
    std::map<int, std::uint64_t> slack;  // anchor + 2^n + 1 - collapse
    std::uint64_t satisfied = 0;
    // Same bound measured from the first merge alone, without the homogeneity hypothesis.
    std::uint64_t first_merge_bound = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      Rng rng(mix_seed(cfg.seed, (static_cast<std::uint64_t>(n) << 32) | s));
      std::vector<PointSet> colours;
      for (int k = 0; k < n; ++k) colours.push_back(pool[uniform_below(rng, pool.size())]);
      const Colouring c = Colouring::from_sets(ladder, colours);
      const auto report = collapse_check(spec, ladder, c);
      ++r.checked;
      if (report.first_merge_level && report.collapse_level &&
          *report.collapse_level <= *report.first_merge_level + static_cast<int>(spec.width()))
        ++first_merge_bound;
      if (report.bound_satisfied) {
        ++satisfied;
        ++slack[*report.anchor_level + static_cast<int>(spec.width()) - *report.collapse_level];
      } else if (r.passed) {
        r.passed = false;
        r.counterexample = {{"poset", poset_to_json(ladder)},
                            {"colouring", colouring_to_json(c)},
                            {"report", collapse_report_to_json(report)},
                            {"omega_partition", partition_to_json(omega_types(c))}};
      }
    }
    Json slack_json = Json::object();
    for (auto [k, v] : slack) slack_json[std::to_string(k)] = v;
    per_n.push_back({{"ladder", ladder_spec_to_json(spec)},
                     {"samples", samples},
                     {"support_pool", pool.size()},
                     {"bound_satisfied", satisfied},
                     {"bound_from_first_merge", first_merge_bound},
                     {"slack_histogram", std::move(slack_json)}});
  }
  r.details = {{"seed", cfg.seed}, {"runs", std::move(per_n)}};
  return r;
}

VerifyResult verify_next_level(const VerifyConfig& cfg) {
  VerifyResult r{.name = "next-level"};
  const int n = default_n(cfg, 2);
  const LadderSpec spec{n, cfg.depth.value_or(7), true};
  const Poset ladder = build_ladder(spec);
  const auto upsets = enumerate_upset_sets(ladder, cfg.budget);
  const std::uint64_t samples = cfg.samples == 0 ? 200 : cfg.samples;

  std::vector<std::vector<PointSet>> colourings;
  colourings.push_back({PointSet{}});
  auto canonical = canonical_colouring(ladder, n).sets();
  canonical.pop_back();
  colourings.push_back(canonical);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rng rng(mix_seed(cfg.seed, s));
    std::vector<PointSet> colours;
    for (int k = 0; k < n; ++k) colours.push_back(upsets[uniform_below(rng, upsets.size())]);
    colourings.push_back(std::move(colours));
  }
  std::uint64_t levels_checked = 0;
  for (const auto& colours : colourings) {
    const Colouring c = Colouring::from_sets(ladder, colours);
    const auto report = next_level_bound_check(spec, ladder, c);
    ++r.checked;
    levels_checked += report.checked_levels.size();
    if (!report.holds() && r.passed) {
      r.passed = false;
      r.counterexample = {{"poset", poset_to_json(ladder)},
                          {"colouring", colouring_to_json(c)},
                          {"report", next_level_report_to_json(report)},
                          {"omega_partition", partition_to_json(omega_types(c))}};
    }
  }
  r.details = {{"ladder", ladder_spec_to_json(spec)}, {"seed", cfg.seed}, {"colourings", colourings.size()},
               {"levels_checked", levels_checked}};
  return r;
}

VerifyResult verify_strictness(const VerifyConfig& cfg) {
  VerifyResult r{.name = "strictness"};
  const int n = default_n(cfg, 1);
  const std::vector<int> depths = cfg.depths.empty() ? std::vector<int>{4, 5, 6, 7, 8} : cfg.depths;
  const auto rows = strictness_report(n, depths, cfg.budget);
  r.checked = rows.size();
  const std::size_t bound = rows.front().max_generated_size;
  bool constant = true;
  bool increasing = true;
  bool canonical = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    constant = constant && rows[i].max_generated_size == bound;
    canonical = canonical && rows[i].canonical_generates_all;
    if (i > 0) increasing = increasing && rows[i].algebra_size > rows[i - 1].algebra_size;
  }
  r.passed = constant && increasing && canonical;
  r.details = {{"n", n},
               {"bound", bound},
               {"bound_constant", constant},
               {"size_increasing", increasing},
               {"canonical_generates_all", canonical},
               {"rows", strictness_to_json(rows)}};
  if (!r.passed) r.counterexample = r.details["rows"];
  return r;
}

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> names = {"residuation", "rank-type", "duality",    "oracle",    "canonical",
                                                 "non-colourable", "collapse", "next-level", "strictness"};
  return names;
}

VerifyResult run_verification(std::string_view name, const VerifyConfig& cfg) {
  if (name == "residuation") return verify_residuation(cfg);
  if (name == "rank-type") return verify_rank_type(cfg);
  if (name == "duality") return verify_duality(cfg);
  if (name == "oracle") return verify_oracle_agreement(cfg);
  if (name == "canonical") return verify_canonical_colourings(cfg);
  if (name == "non-colourable") return verify_non_colourable(cfg);
  if (name == "collapse") return verify_collapse(cfg);
  if (name == "next-level") return verify_next_level(cfg);
  if (name == "strictness") return verify_strictness(cfg);
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

}  // namespace esakia
