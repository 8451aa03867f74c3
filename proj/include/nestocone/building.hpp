#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nestocone/graph.hpp"
#include "nestocone/vertex_set.hpp"

namespace nestocone {

using Block = VertexSet;

/**
 * A building set on a ground set V ⊆ {1, ..., n}: a family of nonempty
 * subsets of V containing every singleton and closed under unions of
 * intersecting members.
 *
 * Restrictions and contractions keep the original vertex labels, so the
 * ground set need not be an initial segment.
 */
class BuildingSet {
public:
    /// Validates the axioms over ground {1..n}. Duplicates are merged.
    static BuildingSet from_blocks(int n, const std::vector<Block>& blocks);
    /// Validates the axioms over an explicit ground set.
    static BuildingSet from_blocks(int n, VertexSet ground, const std::vector<Block>& blocks);
    /// Smallest building set on {1..n} containing the given hyperedges.
    static BuildingSet closure(int n, const std::vector<Block>& generators);

    int n() const { return n_; }
    VertexSet ground() const { return ground_; }
    /// Canonical order (size, then lexicographic).
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    bool contains(VertexSet s) const { return index_.count(s) != 0; }
    std::optional<std::size_t> find(VertexSet s) const;
    /// Throws InputError when s is not a block.
    std::size_t index(VertexSet s) const;
    void require_block(VertexSet s) const { (void)index(s); }

    /// Inclusion-maximal blocks; they partition the ground set.
    const std::vector<Block>& components() const { return components_; }
    bool is_component(VertexSet s) const;
    /// The component containing a nonempty subset of a block.
    Block component_of(VertexSet s) const;

    friend bool operator==(const BuildingSet& a, const BuildingSet& b) {
        return a.n_ == b.n_ && a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }

private:
    BuildingSet(int n, VertexSet ground, std::vector<Block> blocks);

    int n_ = 0;
    VertexSet ground_;
    std::vector<Block> blocks_;
    std::unordered_map<VertexSet, std::size_t> index_;
    std::vector<Block> components_;
};

/// close = false validates the family; close = true treats it as hyperedges.
BuildingSet build_from_blocks(int n, const std::vector<Block>& blocks, bool close);

/// The tubes of g.
BuildingSet graphical_building(const Graph& g);

/// Inclusion-maximal blocks contained in u; they partition u.
std::vector<Block> components_of(const BuildingSet& b, VertexSet u);

/// Inclusion-maximal blocks strictly contained in the block p.
std::vector<Block> maximal_strict_subblocks(const BuildingSet& b, Block p);

/// Definitional test: |p| > 1 and p is not the union of two intersecting
/// blocks other than p.
bool is_elementary(const BuildingSet& b, Block p);

/// Equivalent test: p has two disjoint maximal strict subblocks.
bool is_elementary_by_maximal_blocks(const BuildingSet& b, Block p);

std::vector<Block> elementary_blocks(const BuildingSet& b);

enum class InduceMode { restriction, contraction };

/// Restriction to u (ground u) or contraction of u (ground V \ u), keeping labels.
BuildingSet induce(const BuildingSet& b, VertexSet u, InduceMode mode);

/// For every block B and family C with B ∪ ⋃C a block, some C ∈ C has B ∪ C a block.
bool is_graphical(const BuildingSet& b);

}  // namespace nestocone
