#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esakia/budget.hpp"
#include "esakia/io.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// Parameters for the quantified checks. Each check reads only the fields it needs.
struct VerifyConfig {
  std::string corpus = "exhaustive5,random200:1";
  std::uint64_t seed = 1;
  std::size_t generator_samples = 20;
  std::size_t max_stage = 5;
  std::optional<int> n;
  std::optional<int> depth;
  std::vector<int> depths;
  // 0 selects exhaustive mode where a check supports both.
  std::uint64_t samples = 0;
  int support_levels = 3;
  Budget budget;
};

struct VerifyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  Json details = Json::object();
  // Enough to replay the failure: poset, generators/colouring, both sides.
  Json counterexample = nullptr;
};

Json verify_result_to_json(const VerifyResult& r);

// Up to `count` generator sets with |G| <= 2 drawn from the poset's upsets;
// duplicates inside one set are dropped.
std::vector<std::vector<PointSet>> sample_generator_sets(const std::vector<PointSet>& upsets, std::size_t count,
                                                         std::uint64_t seed);

VerifyResult verify_residuation(const VerifyConfig& cfg);
VerifyResult verify_rank_type(const VerifyConfig& cfg);
VerifyResult verify_duality(const VerifyConfig& cfg);
VerifyResult verify_oracle_agreement(const VerifyConfig& cfg);
VerifyResult verify_canonical_colourings(const VerifyConfig& cfg);
VerifyResult verify_non_colourable(const VerifyConfig& cfg);
VerifyResult verify_collapse(const VerifyConfig& cfg);
VerifyResult verify_next_level(const VerifyConfig& cfg);
VerifyResult verify_strictness(const VerifyConfig& cfg);

// Names accepted by run_verification, in display order.
const std::vector<std::string>& verification_names();
// Throws InvalidArgument on an unknown name.
VerifyResult run_verification(std::string_view name, const VerifyConfig& cfg);

}  // namespace esakia
