#include "nestocone/building.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "nestocone/errors.hpp"

namespace nestocone {

BuildingSet::BuildingSet(int n, VertexSet ground, std::vector<Block> blocks)
    : n_(n), ground_(ground), blocks_(std::move(blocks)) {
    sort_canonical(blocks_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) index_.emplace(blocks_[i], i);
    for (Block b : blocks_) {
        const bool maximal = std::none_of(blocks_.begin(), blocks_.end(),
                                          [&](Block c) { return b.strict_subset_of(c); });
        if (maximal) components_.push_back(b);
    }
}

BuildingSet BuildingSet::from_blocks(int n, const std::vector<Block>& blocks) {
    if (n < 1 || n > kMaxVertices) throw InputError("ground size " + std::to_string(n) + " out of range");
    return from_blocks(n, VertexSet::range(n), blocks);
}

BuildingSet BuildingSet::from_blocks(int n, VertexSet ground, const std::vector<Block>& blocks) {
    if (n < 1 || n > kMaxVertices) throw InputError("ground size " + std::to_string(n) + " out of range");
    if (ground.empty()) throw InputError("empty ground set");
    if (!ground.subset_of(VertexSet::range(n))) throw InputError("ground set exceeds {1.." + std::to_string(n) + "}");
    std::unordered_set<VertexSet> seen;
    std::vector<Block> unique;
    for (Block b : blocks) {
        if (b.empty()) throw InputError("empty block");
        if (!b.subset_of(ground)) throw InputError("block " + b.label() + " leaves the ground set");
        if (seen.insert(b).second) unique.push_back(b);
    }
    std::string missing;
    ground.for_each([&](Vertex v) {
        if (missing.empty() && !seen.count(VertexSet::singleton(v))) missing = std::to_string(v);
    });
    if (!missing.empty()) throw ValidationError("singleton {" + missing + "} is not a block");
    sort_canonical(unique);
    for (std::size_t i = 0; i < unique.size(); ++i) {
        for (std::size_t j = i + 1; j < unique.size(); ++j) {
            if (unique[i].intersects(unique[j]) && !seen.count(unique[i] | unique[j]))
                throw ValidationError("blocks " + unique[i].label() + " and " + unique[j].label() +
                                      " intersect but their union " + (unique[i] | unique[j]).label() +
                                      " is not a block");
        }
    }
    return BuildingSet(n, ground, std::move(unique));
}

BuildingSet BuildingSet::closure(int n, const std::vector<Block>& generators) {
    if (n < 1 || n > kMaxVertices) throw InputError("ground size " + std::to_string(n) + " out of range");
    const auto ground = VertexSet::range(n);
    std::unordered_set<VertexSet> family;
    std::vector<Block> work;
    auto add = [&](Block b) {
        if (family.insert(b).second) work.push_back(b);
    };
    for (Vertex v = 1; v <= n; ++v) add(VertexSet::singleton(v));
    for (Block g : generators) {
        if (g.empty()) throw InputError("empty hyperedge");
        if (!g.subset_of(ground)) throw InputError("hyperedge " + g.label() + " leaves the ground set");
        add(g);
    }
    // Each new member is united with every current member it meets; the
    // family only grows, so this reaches the fixed point.
    std::vector<Block> members;
    while (!work.empty()) {
        const Block b = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].intersects(b)) add(members[i] | b);
        }
        members.push_back(b);
    }
    return from_blocks(n, ground, std::vector<Block>(family.begin(), family.end()));
}

std::optional<std::size_t> BuildingSet::find(VertexSet s) const {
    const auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t BuildingSet::index(VertexSet s) const {
    const auto it = index_.find(s);
    if (it == index_.end()) throw InputError(s.label() + " is not a block");
    return it->second;
}

bool BuildingSet::is_component(VertexSet s) const {
    return std::find(components_.begin(), components_.end(), s) != components_.end();
}

Block BuildingSet::component_of(VertexSet s) const {
    for (Block k : components_)
        if (s.intersects(k)) return k;
    throw InputError(s.label() + " does not meet the ground set");
}

BuildingSet build_from_blocks(int n, const std::vector<Block>& blocks, bool close) {
    return close ? BuildingSet::closure(n, blocks) : BuildingSet::from_blocks(n, blocks);
}

BuildingSet graphical_building(const Graph& g) { return BuildingSet::from_blocks(g.n(), enumerate_tubes(g)); }

std::vector<Block> components_of(const BuildingSet& b, VertexSet u) {
    if (!u.subset_of(b.ground())) throw InputError(u.label() + " leaves the ground set");
    std::vector<Block> inside;
    for (Block c : b.blocks())
        if (c.subset_of(u)) inside.push_back(c);
    std::vector<Block> out;
    for (Block c : inside) {
        const bool maximal =
            std::none_of(inside.begin(), inside.end(), [&](Block d) { return c.strict_subset_of(d); });
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<Block> maximal_strict_subblocks(const BuildingSet& b, Block p) {
    b.require_block(p);
    std::vector<Block> inside;
    for (Block c : b.blocks())
        if (c.strict_subset_of(p)) inside.push_back(c);
    std::vector<Block> out;
    for (Block c : inside) {
        const bool maximal =
            std::none_of(inside.begin(), inside.end(), [&](Block d) { return c.strict_subset_of(d); });
        if (maximal) out.push_back(c);
    }
    return out;
}

bool is_elementary(const BuildingSet& b, Block p) {
    b.require_block(p);
    if (p.size() <= 1) return false;
    std::vector<Block> inside;
    for (Block c : b.blocks())
        if (c.strict_subset_of(p)) inside.push_back(c);
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            if ((inside[i] | inside[j]) == p && inside[i].intersects(inside[j])) return false;
    return true;
}

bool is_elementary_by_maximal_blocks(const BuildingSet& b, Block p) {
    const auto mu = maximal_strict_subblocks(b, p);
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j)
            if (!mu[i].intersects(mu[j])) return true;
    return false;
}

std::vector<Block> elementary_blocks(const BuildingSet& b) {
    std::vector<Block> out;
    for (Block p : b.blocks())
        if (is_elementary(b, p)) out.push_back(p);
    return out;
}

BuildingSet induce(const BuildingSet& b, VertexSet u, InduceMode mode) {
    if (!u.subset_of(b.ground())) throw InputError(u.label() + " leaves the ground set");
    std::vector<Block> blocks;
    if (mode == InduceMode::restriction) {
        if (u.empty()) throw InputError("restriction to the empty set");
        for (Block c : b.blocks())
            if (c.subset_of(u)) blocks.push_back(c);
        return BuildingSet::from_blocks(b.n(), u, blocks);
    }
    const VertexSet rest = b.ground() - u;
    if (rest.empty()) throw InputError("contraction of the whole ground set");
    std::unordered_set<VertexSet> seen;
    for (Block c : b.blocks()) {
        const Block d = c - u;
        if (d.empty()) continue;
        if ((d == c || b.contains(d | u)) && seen.insert(d).second) blocks.push_back(d);
    }
    // C ⊆ rest qualifies when C or C ∪ u is a block; the loop above sees
    // every such C through C itself or through the block C ∪ u.
    return BuildingSet::from_blocks(b.n(), rest, blocks);
}

bool is_graphical(const BuildingSet& b) {
    for (Block base : b.blocks()) {
        std::vector<Block> far;
        for (Block c : b.blocks())
            if (!b.contains(base | c)) far.push_back(c);
        // All unions of nonempty subfamilies of `far`.
        std::unordered_set<VertexSet> unions(far.begin(), far.end());
        std::vector<VertexSet> frontier(far.begin(), far.end());
        while (!frontier.empty()) {
            std::vector<VertexSet> next;
            for (VertexSet s : frontier)
                for (Block c : far)
                    if (unions.insert(s | c).second) next.push_back(s | c);
            frontier = std::move(next);
        }
        for (VertexSet s : unions)
            if (b.contains(base | s)) return false;
    }
    return true;
}

}  // namespace nestocone
