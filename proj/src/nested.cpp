#include "nestocone/nested.hpp"

#include <algorithm>
#include <functional>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

bool laminar(const std::vector<Block>& bs) {
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            const Block a = bs[i];
            const Block c = bs[j];
            if (a.intersects(c) && !a.subset_of(c) && !c.subset_of(a)) return false;
        }
    return true;
}

bool has_components(const BuildingSet& b, const NestedSet& s) {
    return std::all_of(b.components().begin(), b.components().end(), [&](Block k) { return s.contains(k); });
}

void require_members(const BuildingSet& b, const NestedSet& s) {
    for (Block x : s.blocks) b.require_block(x);
}

// Whether adding x to a nested set keeps every block U ⊋ x uncovered by the
// members strictly inside U.
bool extends_nested(const BuildingSet& b, const std::vector<Block>& chosen, Block x) {
    for (Block c : chosen)
        if (c.intersects(x) && !c.subset_of(x) && !x.subset_of(c)) return false;
    for (Block u : b.blocks()) {
        if (!x.strict_subset_of(u)) continue;
        VertexSet cover = x;
        for (Block c : chosen)
            if (c.strict_subset_of(u)) cover |= c;
        if (cover == u) return false;
    }
    // x itself must not be covered by members strictly inside it.
    VertexSet below;
    for (Block c : chosen)
        if (c.strict_subset_of(x)) below |= c;
    return below != x;
}

void require_maximal(const BuildingSet& b, const NestedSet& s) {
    require_members(b, s);
    if (!is_maximal_nested_set(b, s)) throw InputError("not a maximal nested set");
}

}  // namespace

NestedSet::NestedSet(std::vector<Block> bs) : blocks(std::move(bs)) {
    sort_canonical(blocks);
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
}

bool NestedSet::contains(Block b) const {
    return std::binary_search(blocks.begin(), blocks.end(), b, CanonicalLess{});
}

bool operator<(const NestedSet& a, const NestedSet& b) {
    return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                                        CanonicalLess{});
}

bool is_nested_set(const BuildingSet& b, const NestedSet& s) {
    require_members(b, s);
    if (!has_components(b, s) || !laminar(s.blocks)) return false;
    // Every family of at least two pairwise disjoint members.
    const auto& bs = s.blocks;
    bool ok = true;
    std::function<void(std::size_t, VertexSet, int)> grow = [&](std::size_t start, VertexSet acc, int count) {
        if (!ok) return;
        if (count >= 2 && b.contains(acc)) {
            ok = false;
            return;
        }
        for (std::size_t i = start; i < bs.size(); ++i)
            if (!bs[i].intersects(acc)) grow(i + 1, acc | bs[i], count + 1);
    };
    grow(0, VertexSet{}, 0);
    return ok;
}

bool is_nested_set_fast(const BuildingSet& b, const NestedSet& s) {
    require_members(b, s);
    if (!has_components(b, s) || !laminar(s.blocks)) return false;
    for (Block u : b.blocks()) {
        VertexSet cover;
        for (Block c : s.blocks)
            if (c.strict_subset_of(u)) cover |= c;
        if (cover == u) return false;
    }
    return true;
}

bool is_maximal_nested_set(const BuildingSet& b, const NestedSet& s) {
    return s.size() == static_cast<std::size_t>(b.ground().size()) && is_nested_set_fast(b, s);
}

std::vector<NestedSet> enumerate_maximal_nested_sets(const BuildingSet& b) {
    const auto target = static_cast<std::size_t>(b.ground().size());
    std::vector<Block> free;
    for (Block x : b.blocks())
        if (!b.is_component(x)) free.push_back(x);
    std::vector<Block> chosen(b.components().begin(), b.components().end());
    std::vector<NestedSet> out;
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        if (chosen.size() == target) {
            out.emplace_back(chosen);
            return;
        }
        if (chosen.size() + (free.size() - i) < target) return;
        const Block x = free[i];
        if (extends_nested(b, chosen, x)) {
            chosen.push_back(x);
            dfs(i + 1);
            chosen.pop_back();
        }
        dfs(i + 1);
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> roots(const BuildingSet& b, const NestedSet& s) {
    require_members(b, s);
    std::vector<VertexSet> out;
    out.reserve(s.size());
    for (Block x : s.blocks) out.push_back(root_of(s, x));
    return out;
}

VertexSet root_of(const NestedSet& s, Block x) {
    VertexSet below;
    for (Block c : s.blocks)
        if (c.strict_subset_of(x)) below |= c;
    return x - below;
}

Block parent_in(const NestedSet& s, Block x) {
    Block best;
    bool found = false;
    for (Block c : s.blocks) {
        if (x.strict_subset_of(c) && (!found || c.size() < best.size())) {
            best = c;
            found = true;
        }
    }
    if (!found) throw InputError(x.label() + " has no strict superset in the nested set");
    return best;
}

std::vector<Flip> flips(const BuildingSet& b, const NestedSet& s) {
    require_maximal(b, s);
    std::vector<Flip> out;
    for (Block x : s.blocks) {
        if (b.is_component(x)) continue;
        std::vector<Block> rest;
        for (Block c : s.blocks)
            if (c != x) rest.push_back(c);
        std::vector<Block> entering;
        for (Block y : b.blocks()) {
            if (y == x || s.contains(y)) continue;
            if (extends_nested(b, rest, y)) entering.push_back(y);
        }
        if (entering.size() != 1)
            throw InvariantViolation("flip at " + x.label() + " has " + std::to_string(entering.size()) +
                                     " candidate blocks");
        const Block y = entering.front();
        rest.push_back(y);
        NestedSet next(std::move(rest));
        const Block parent = parent_in(s, x);
        if (parent_in(next, y) != parent) throw InvariantViolation("adjacent nested sets disagree on the parent");
        const VertexSet pivot_out = root_of(next, parent);
        const VertexSet pivot_in = root_of(s, parent);
        if (pivot_out.size() != 1 || pivot_in.size() != 1) throw InvariantViolation("non-singleton pivot root");
        out.push_back({ExchangeFrame{x, y, parent, pivot_out.min(), pivot_in.min()}, std::move(next)});
    }
    return out;
}

bool is_exchange_witness(const BuildingSet& b, Block x, Block y, const ExchangeWitness& w) {
    if (!x.strict_subset_of(w.parent) || !y.strict_subset_of(w.parent)) return false;
    if (!(x - y).contains(w.v) || !(y - x).contains(w.v2)) return false;
    for (Block c : b.blocks()) {
        if (!c.subset_of(w.parent) || !is_elementary(b, c)) continue;
        if (c.intersects(x) && !c.subset_of(x) && !c.contains(w.v2)) return false;
        if (c.intersects(y) && !c.subset_of(y) && !c.contains(w.v)) return false;
    }
    return true;
}

std::vector<ExchangeWitness> exchange_witnesses(const BuildingSet& b, Block x, Block y) {
    b.require_block(x);
    b.require_block(y);
    if (x == y) throw InputError("a block is not exchangeable with itself");
    std::vector<Block> elementary;
    for (Block c : b.blocks())
        if (is_elementary(b, c)) elementary.push_back(c);
    std::vector<ExchangeWitness> out;
    for (Block p : b.blocks()) {
        if (!x.strict_subset_of(p) || !y.strict_subset_of(p)) continue;
        // Pivots forced by the elementary blocks leaving x (resp. y) inside p.
        VertexSet allowed_in = y - x;
        VertexSet allowed_out = x - y;
        for (Block c : elementary) {
            if (!c.subset_of(p)) continue;
            if (c.intersects(x) && !c.subset_of(x)) allowed_in = allowed_in & c;
            if (c.intersects(y) && !c.subset_of(y)) allowed_out = allowed_out & c;
        }
        allowed_out.for_each([&](Vertex v) {
            allowed_in.for_each([&](Vertex v2) { out.push_back({p, v, v2}); });
        });
    }
    return out;
}

bool is_exchange_frame(const BuildingSet& b, const ExchangeFrame& f) {
    for (Block x : {f.b_out, f.b_in, f.parent})
        if (!b.contains(x)) return false;
    if (f.b_out == f.b_in) return false;
    return is_exchange_witness(b, f.b_out, f.b_in, {f.parent, f.pivot_out, f.pivot_in});
}

std::vector<ExchangeFrame> maximal_exchange_frames(const BuildingSet& b) {
    std::vector<ExchangeFrame> out;
    for (Block p : b.blocks()) {
        if (p.size() < 2) continue;
        const auto mu = maximal_strict_subblocks(b, p);
        for (std::size_t i = 0; i < mu.size(); ++i) {
            for (std::size_t j = i + 1; j < mu.size(); ++j) {
                const auto ws = exchange_witnesses(b, mu[i], mu[j]);
                const auto it =
                    std::find_if(ws.begin(), ws.end(), [&](const ExchangeWitness& w) { return w.parent == p; });
                if (it == ws.end())
                    throw InvariantViolation("maximal subblocks " + mu[i].label() + ", " + mu[j].label() +
                                             " are not exchangeable inside " + p.label());
                out.push_back({mu[i], mu[j], p, it->v, it->v2});
            }
        }
    }
    return out;
}

}  // namespace nestocone
