#pragma once

#include <cstddef>
#include <vector>

#include "nestocone/building.hpp"
#include "nestocone/linalg.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/typecone.hpp"

namespace nestocone {

/// Coefficients of the unique linear dependence among the projected
/// g-vectors of two adjacent maximal nested sets, block-indexed, scaled so
/// the two exchanged blocks sum to 2. Component entries are zero.
RowVector flip_dependence_coefficients(const BuildingSet& b, const NestedSet& s, const NestedSet& s2);

/// The same dependence as a canonical inequality.
Inequality flip_dependence(const BuildingSet& b, const NestedSet& s, const NestedSet& s2);

/// Whether two maximal nested sets share all but one block.
bool adjacent(const NestedSet& s, const NestedSet& s2);

/// Flip dependences over every adjacent pair of maximal nested sets.
ConeDescription brute_cone(const BuildingSet& b);

/// Whether inequality `which` defines a facet: some h with ⟨n_which, h⟩ = 0
/// and ⟨n_j, h⟩ ≥ 1 for the others.
bool supports_facet(const ConeDescription& c, std::size_t which);

/// Drops every inequality implied by the others, via exact linear programs.
ConeDescription irredundant(const ConeDescription& c);

/// Same equalities and inequalities. Throws InputError on different buildings.
bool cone_equal(const ConeDescription& c1, const ConeDescription& c2);

/// Number of vertices of the Minkowski sum of the simplices of all blocks,
/// taking the maximizer of every generic linear functional on the ground set.
std::size_t minkowski_vertex_count(const BuildingSet& b);

}  // namespace nestocone
