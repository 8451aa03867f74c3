#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nestocone/building.hpp"
#include "nestocone/linalg.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/typecone.hpp"

namespace nestocone {

struct Polytope {
    std::size_t dim = 0;
    /// Name of each ambient coordinate.
    std::vector<std::string> axes;
    std::vector<RowVector> vertices;
    /// Maximal nested set of each vertex.
    std::vector<NestedSet> labels;
    /// Pairs of vertex indices, i < j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// The point x in the ground coordinates with Σ_{v∈B} x_v = h_B for every B ∈ s.
/// Throws NotInteriorError when h is not in the open type cone.
RowVector vertex_of(const BuildingSet& b, const HeightVector& h, const NestedSet& s);

/// Blocks B with Σ_{v∈B} x_v = h_B; InvariantViolation if some block is exceeded.
std::vector<Block> tight_blocks(const BuildingSet& b, const HeightVector& h, const RowVector& x);

/// One vertex per maximal nested set; edges join vertices whose common tight
/// blocks span a space of dimension |ground| − 1.
Polytope realize_polytope(const BuildingSet& b, const HeightVector& h);

/// {z ≥ 0 : K z = p} over the non-component block coordinates, K the facet
/// normals. Throws NotSimplicialError or InputError (non-positive p).
Polytope kinematic_polytope(const BuildingSet& b, const RowVector& p);

/// An interior height whose facet slacks equal p (solves K h = p).
HeightVector kinematic_heights(const BuildingSet& b, const RowVector& p);

}  // namespace nestocone
