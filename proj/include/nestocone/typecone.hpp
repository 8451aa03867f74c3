#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nestocone/building.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/rational.hpp"

namespace nestocone {

/// Characteristic vector of a block, indexed by vertices 1..n (entry v-1).
using GVector = std::vector<int>;

/// A strict inequality ⟨coeffs, h⟩ > 0 on block-indexed heights. Coefficients
/// follow the building's canonical block order and vanish on components.
struct Inequality {
    std::vector<long long> coeffs;

    friend auto operator<=>(const Inequality&, const Inequality&) = default;
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Type cone: component coordinates pinned to zero plus strict inequalities.
struct ConeDescription {
    BuildingSet building;
    std::vector<Block> equalities;
    std::vector<Inequality> inequalities;
};

/// Rational height per block, in canonical block order.
using HeightVector = std::vector<Rational>;

enum class HeightVariant { devadoss, postnikov };
enum class Membership { interior, boundary, outside };

GVector gvector(const BuildingSet& b, Block x);

/// Zero the component coordinates, divide by the gcd. Throws
/// InvariantViolation when nothing survives.
Inequality canonical_inequality(const BuildingSet& b, std::vector<long long> raw);

/// Sorted, duplicate-free cone with the components as equalities.
ConeDescription make_cone(const BuildingSet& b, std::vector<Inequality> inequalities);

/// Raw normal f_B + f_B' + Σ_{κ(P \ (B ∪ B'))} f_K − f_P − Σ_{κ(B ∩ B')} f_K.
std::vector<long long> frame_normal(const BuildingSet& b, Block x, Block y, Block parent);

/// Canonical wall inequality of a valid exchange frame; InputError otherwise.
Inequality wall_inequality(const BuildingSet& b, const ExchangeFrame& f);

/// Wall inequalities of every flip of every maximal nested set.
ConeDescription redundant_cone(const BuildingSet& b);

/// Irredundant description read off the maximal strict subblocks.
ConeDescription facet_cone(const BuildingSet& b);

/// Facets of a graph associahedron from pairs of non-disconnecting vertices.
ConeDescription graphical_facet_cone(const Graph& g);

/// |elementary blocks| + Σ over other non-singleton P of C(|μ(P)|, 2).
long long facet_count(const BuildingSet& b);

/// Σ over tubes t of C(δ(t), 2).
long long graphical_facet_count(const Graph& g);

/// Every block with at least three maximal strict subblocks is elementary.
bool is_simplicial(const BuildingSet& b);

/// Number of non-component blocks (rays of the fan).
long long ray_count(const BuildingSet& b);
/// |ground| − |components| (dimension of the fan's ambient space).
long long fan_dimension(const BuildingSet& b);

/// Devadoss: −3^{|B|}. Postnikov: −|{C ∈ 𝔅 : C ⊆ B}|.
HeightVector raw_classic_height(const BuildingSet& b, HeightVariant variant);
/// Translate so every component has height zero.
HeightVector normalize_height(const BuildingSet& b, const HeightVector& h);
HeightVector classic_height(const BuildingSet& b, HeightVariant variant);

Rational evaluate(const Inequality& ineq, const HeightVector& h);

/// Classifies h against facet_cone(b). Throws InputError on a size mismatch
/// or a nonzero component coordinate.
Membership height_membership(const BuildingSet& b, const HeightVector& h);
Membership cone_membership(const ConeDescription& c, const HeightVector& h);

std::string to_string(Membership m);

/// Positive terms on the left, negated negative terms on the right; terms by
/// decreasing block size, ties in canonical order. "0" for an empty side.
std::string format_inequality(const BuildingSet& b, const Inequality& ineq);

struct IntervalRow {
    Block block;
    int i = 0;
    int j = 0;
    int left = 0;   // ℓ(i, j)
    int right = 0;  // r(i, j)
    bool elementary = false;
    /// s-sequence when elementary, t-sequence otherwise.
    std::vector<int> sequence;
    Inequality inequality;
};

struct IntervalProfile {
    std::vector<IntervalRow> rows;
    ConeDescription cone;
};

/// Whether every block is an interval of a ground set {1..n}.
bool is_interval_building(const BuildingSet& b);

/// Per-block interval data and the facet description built from it. Throws
/// NotIntervalError on a non-interval block.
IntervalProfile interval_profile(const BuildingSet& b);

}  // namespace nestocone
