#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "esakia/poset.hpp"

namespace esakia {

// One representative per isomorphism class of posets on exactly `points`
// points, canonical-form order. Points are named p0, p1, ...
std::vector<Poset> posets_up_to_iso(std::size_t points);

// All posets on 1..max_points points up to isomorphism (max_points <= 7).
std::vector<Poset> exhaustive_posets(std::size_t max_points);

// `count` random posets on 1..max_points points from a seeded generator: a
// random DAG on a random labelling, closed transitively.
std::vector<Poset> random_posets(std::size_t count, std::size_t max_points, std::uint64_t seed);

// Comma-separated corpus specifiers:
//   exhaustiveK          all posets on <= K points up to isomorphism
//   randomN:S[:M]        N random posets, seed S, at most M points (default 7)
// Throws InvalidArgument on malformed specifiers.
std::vector<Poset> corpus_from_spec(std::string_view spec);

// Small named posets used across tests and examples.
Poset chain2();        // b < t
Poset fork_v3();       // b below incomparable x, y
Poset antichain(std::size_t k);
Poset single_point();

}  // namespace esakia
