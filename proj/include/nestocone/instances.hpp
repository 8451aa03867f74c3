#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nestocone/building.hpp"
#include "nestocone/graph.hpp"
#include "nestocone/nested.hpp"

namespace nestocone {

/// One representative per isomorphism class of graphs on {1..n}, n ≤ 6.
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);

/// Closure of 1–4 random hyperedges of size 2–4 on a ground set of size 3–6.
BuildingSet random_building_closure(std::mt19937_64& rng);

/// Closure of random intervals of [n] (always an interval building set).
BuildingSet random_interval_building(std::mt19937_64& rng, int n);

/// All intervals of [n].
BuildingSet all_intervals(int n);

/// Singletons and the initial intervals [1, i].
BuildingSet pitman_stanley(int n);

/// The 21-block building set on [9] used as the running example.
BuildingSet bcirc();
/// Its two adjacent maximal nested sets.
NestedSet bcirc_nested();
NestedSet bcirc_nested_prime();

}  // namespace nestocone
