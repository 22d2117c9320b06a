#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esakia/heyting.hpp"
#include "esakia/ladder.hpp"
#include "esakia/poset.hpp"
#include "esakia/subalgebra.hpp"
#include "esakia/types.hpp"
#include "esakia/variety.hpp"

namespace esakia {

using Json = nlohmann::json;

// {"points": [names], "leq": [[i, j], ...]} with [i, j] meaning i ≤ j. The strict
// relation is written in full; ladders add "levels".
Json poset_to_json(const Poset& p);
// Throws InvalidArgument on shape errors, plus anything Poset::validate throws.
Poset poset_from_json(const Json& j);
Poset parse_poset(const std::string& text);

// Hasse diagram: cover edges only, drawn upward.
std::string poset_to_dot(const Poset& p);

// Sorted index array.
Json point_set_to_json(const PointSet& s);
// Accepts an index array or an array of point names. Throws ForeignPoint.
PointSet point_set_from_json(const Poset& p, const Json& j);

Json colouring_to_json(const Colouring& c);
Json partition_to_json(const TypePartition& t);
Json algebra_to_json(const FiniteHeytingAlgebra& a);
Json ranked_algebra_to_json(const RankedAlgebra& ra);
Json generation_report_to_json(const GenerationReport& r);
Json collapse_report_to_json(const CollapseReport& r);
Json next_level_report_to_json(const NextLevelReport& r);
Json non_colourability_to_json(const NonColourabilityReport& r);
Json strictness_to_json(std::span<const StrictnessRow> rows);
Json ladder_spec_to_json(const LadderSpec& spec);

// Deterministic text form used for every report file.
std::string dump(const Json& j);

}  // namespace esakia
