#pragma once

#include <compare>
#include <vector>

#include "nestocone/building.hpp"

namespace nestocone {

/// A set of blocks, stored in canonical order.
struct NestedSet {
    std::vector<Block> blocks;

    NestedSet() = default;
    explicit NestedSet(std::vector<Block> bs);

    bool contains(Block b) const;
    std::size_t size() const { return blocks.size(); }

    friend bool operator==(const NestedSet&, const NestedSet&) = default;
    friend bool operator<(const NestedSet& a, const NestedSet& b);
};

/// Exchanged blocks B (leaving) and B' (entering), their parent P and the
/// pivots v ∈ B \ B', v' ∈ B' \ B.
struct ExchangeFrame {
    Block b_out;
    Block b_in;
    Block parent;
    Vertex pivot_out = 0;
    Vertex pivot_in = 0;

    friend bool operator==(const ExchangeFrame&, const ExchangeFrame&) = default;
};

struct Flip {
    ExchangeFrame frame;
    NestedSet result;
};

/// A parent P with pivots (v, v') certifying that two blocks are exchangeable.
struct ExchangeWitness {
    Block parent;
    Vertex v = 0;
    Vertex v2 = 0;

    friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

/// Definitional check: contains the components, members pairwise nested or
/// disjoint, and no union of two or more pairwise disjoint members is a block.
/// Throws InputError when a member is not a block.
bool is_nested_set(const BuildingSet& b, const NestedSet& s);

/// Equivalent covering check: laminar, contains the components, and for every
/// block U the members strictly inside U do not cover U.
bool is_nested_set_fast(const BuildingSet& b, const NestedSet& s);

bool is_maximal_nested_set(const BuildingSet& b, const NestedSet& s);

/// All maximal nested sets (each of size |ground|), in lexicographic order of
/// their canonical block lists.
std::vector<NestedSet> enumerate_maximal_nested_sets(const BuildingSet& b);

/// Root of each member: B minus the members strictly below it. Aligned with s.blocks.
std::vector<VertexSet> roots(const BuildingSet& b, const NestedSet& s);

/// Root of a single member.
VertexSet root_of(const NestedSet& s, Block x);

/// Minimal member strictly containing x.
Block parent_in(const NestedSet& s, Block x);

/// One flip per non-component member of a maximal nested set.
std::vector<Flip> flips(const BuildingSet& b, const NestedSet& s);

/// All witnesses (P, v, v') making x and y exchangeable; empty iff they are not.
std::vector<ExchangeWitness> exchange_witnesses(const BuildingSet& b, Block x, Block y);

/// Whether (P, v, v') certifies exchangeability of x and y.
bool is_exchange_witness(const BuildingSet& b, Block x, Block y, const ExchangeWitness& w);

/// Whether the frame's blocks are exchangeable with its parent and pivots.
bool is_exchange_frame(const BuildingSet& b, const ExchangeFrame& f);

/// Frames (B, B', P) for distinct B, B' among the maximal strict subblocks of
/// each non-singleton block P, with the smallest valid pivots.
std::vector<ExchangeFrame> maximal_exchange_frames(const BuildingSet& b);

}  // namespace nestocone
