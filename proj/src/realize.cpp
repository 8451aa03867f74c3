#include "nestocone/realize.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

std::vector<std::string> ground_axes(const BuildingSet& b) {
    std::vector<std::string> axes;
    b.ground().for_each([&](Vertex v) { axes.push_back("x" + std::to_string(v)); });
    return axes;
}

void require_interior(const BuildingSet& b, const HeightVector& h) {
    const auto m = height_membership(b, h);
    if (m != Membership::interior) throw NotInteriorError("height vector lies " + to_string(m) + " the type cone");
}

RowVector solve_vertex(const BuildingSet& b, const HeightVector& h, const NestedSet& s) {
    const auto vertices = b.ground().to_vector();
    RowVector x(vertices.size(), Rational(0));
    auto position = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (Block blk : s.blocks) {
        Rational value = h[b.index(blk)];
        VertexSet below;
        for (Block c : s.blocks) {
            if (!c.strict_subset_of(blk)) continue;
            const bool child = std::none_of(s.blocks.begin(), s.blocks.end(), [&](Block d) {
                return c.strict_subset_of(d) && d.strict_subset_of(blk);
            });
            if (child) {
                value -= h[b.index(c)];
                below |= c;
            }
        }
        const VertexSet root = blk - below;
        if (root.size() != 1) throw InvariantViolation("root of " + blk.label() + " is not a singleton");
        x[position(root.min())] = value;
    }
    return x;
}

Rational block_sum(const BuildingSet& b, Block blk, const RowVector& x) {
    Rational total = 0;
    std::size_t i = 0;
    b.ground().for_each([&](Vertex v) {
        if (blk.contains(v)) total += x[i];
        ++i;
    });
    return total;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return out;
    for (;;) {
        out.push_back(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count / 64 + 1));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        }));
    for (auto& j : jobs) j.get();
}

}  // namespace

RowVector vertex_of(const BuildingSet& b, const HeightVector& h, const NestedSet& s) {
    if (!is_maximal_nested_set(b, s)) throw InputError("not a maximal nested set");
    require_interior(b, h);
    const auto x = solve_vertex(b, h, s);
    for (Block blk : b.blocks()) {
        const Rational sum = block_sum(b, blk, x);
        if (s.contains(blk) ? sum != h[b.index(blk)] : sum >= h[b.index(blk)])
            throw InvariantViolation("vertex of a nested set is not tight exactly on its blocks");
    }
    return x;
}

std::vector<Block> tight_blocks(const BuildingSet& b, const HeightVector& h, const RowVector& x) {
    std::vector<Block> out;
    for (Block blk : b.blocks()) {
        const Rational sum = block_sum(b, blk, x);
        const Rational& bound = h[b.index(blk)];
        if (sum > bound) throw InvariantViolation("point violates the inequality of " + blk.label());
        if (sum == bound) out.push_back(blk);
    }
    return out;
}

Polytope realize_polytope(const BuildingSet& b, const HeightVector& h) {
    require_interior(b, h);
    Polytope poly;
    poly.dim = static_cast<std::size_t>(b.ground().size());
    poly.axes = ground_axes(b);
    std::vector<std::vector<Block>> tight;
    for (auto& s : enumerate_maximal_nested_sets(b)) {
        auto x = solve_vertex(b, h, s);
        tight.push_back(tight_blocks(b, h, x));
        poly.vertices.push_back(std::move(x));
        poly.labels.push_back(std::move(s));
    }
    const auto vertices = b.ground().to_vector();
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < tight.size(); ++i) {
        for (std::size_t j = i + 1; j < tight.size(); ++j) {
            std::vector<Block> common;
            std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(), tight[j].end(),
                                  std::back_inserter(common), CanonicalLess{});
            if (common.size() + 1 < n) continue;
            Matrix a;
            for (Block blk : common) {
                RowVector row(n, Rational(0));
                for (std::size_t k = 0; k < n; ++k)
                    if (blk.contains(vertices[k])) row[k] = 1;
                a.push_back(std::move(row));
            }
            if (rank(a, n) + 1 == n) poly.edges.emplace_back(i, j);
        }
    }
    return poly;
}

Polytope kinematic_polytope(const BuildingSet& b, const RowVector& p) {
    if (!is_simplicial(b)) throw NotSimplicialError("type cone is not simplicial");
    const auto cone = facet_cone(b);
    const std::size_t m = cone.inequalities.size();
    if (p.size() != m)
        throw InputError("p has " + std::to_string(p.size()) + " entries, expected " + std::to_string(m));
    for (const auto& q : p)
        if (q <= 0) throw InputError("p must be strictly positive");

    std::vector<std::size_t> coords;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b.is_component(b.blocks()[k])) coords.push_back(k);
    const std::size_t big_n = coords.size();
    if (m > big_n) throw InvariantViolation("more facets than coordinates in a simplicial cone");
    const std::size_t zeros = big_n - m;

    std::set<NestedSet> maximal;
    for (auto& s : enumerate_maximal_nested_sets(b)) maximal.insert(std::move(s));

    const auto candidates = combinations(big_n, zeros);
    std::vector<std::optional<RowVector>> found(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t c) {
        const auto& zero = candidates[c];
        std::vector<std::size_t> free;
        for (std::size_t k = 0, z = 0; k < big_n; ++k) {
            if (z < zero.size() && zero[z] == k) {
                ++z;
                continue;
            }
            free.push_back(k);
        }
        LinearSystem sys;
        sys.cols = free.size();
        sys.rhs = p;
        for (const auto& ineq : cone.inequalities) {
            RowVector row(free.size(), Rational(0));
            for (std::size_t f = 0; f < free.size(); ++f) row[f] = ineq.coeffs[coords[free[f]]];
            sys.a.push_back(std::move(row));
        }
        if (rank(sys.a, sys.cols) != sys.cols) return;
        const auto sol = solve(sys);
        if (!sol) return;
        if (std::any_of(sol->begin(), sol->end(), [](const Rational& q) { return q < 0; })) return;
        RowVector z(big_n, Rational(0));
        for (std::size_t f = 0; f < free.size(); ++f) z[free[f]] = (*sol)[f];
        found[c] = std::move(z);
    });

    std::map<NestedSet, RowVector> by_label;
    std::set<RowVector> seen;
    for (auto& z : found) {
        if (!z || !seen.insert(*z).second) continue;
        std::vector<Block> blocks = b.components();
        for (std::size_t k = 0; k < big_n; ++k)
            if ((*z)[k] == 0) blocks.push_back(b.blocks()[coords[k]]);
        NestedSet label(std::move(blocks));
        if (!maximal.count(label))
            throw InvariantViolation("zero set of a kinematic vertex is not a maximal nested set");
        if (!by_label.emplace(std::move(label), std::move(*z)).second)
            throw InvariantViolation("two kinematic vertices share a zero set");
    }

    Polytope poly;
    poly.dim = big_n;
    for (std::size_t k : coords) poly.axes.push_back("z" + b.blocks()[k].label());
    for (auto& [label, z] : by_label) {
        poly.labels.push_back(label);
        poly.vertices.push_back(z);
    }
    // The polytope is simple: an edge keeps all but one of the zero coordinates.
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < poly.vertices.size(); ++j) {
            std::size_t common = 0;
            for (std::size_t k = 0; k < big_n; ++k)
                if (poly.vertices[i][k] == 0 && poly.vertices[j][k] == 0) ++common;
            if (zeros > 0 && common + 1 == zeros) poly.edges.emplace_back(i, j);
        }
    }
    return poly;
}

HeightVector kinematic_heights(const BuildingSet& b, const RowVector& p) {
    if (!is_simplicial(b)) throw NotSimplicialError("type cone is not simplicial");
    const auto cone = facet_cone(b);
    if (p.size() != cone.inequalities.size()) throw InputError("p has the wrong length");
    for (const auto& q : p)
        if (q <= 0) throw InputError("p must be strictly positive");
    LinearSystem sys;
    sys.cols = b.size();
    sys.rhs = p;
    for (const auto& ineq : cone.inequalities) {
        RowVector row(b.size(), Rational(0));
        for (std::size_t k = 0; k < b.size(); ++k) row[k] = ineq.coeffs[k];
        sys.a.push_back(std::move(row));
    }
    // Component columns are zero in every row, so free variables (set to 0)
    // include them.
    const auto sol = solve(sys);
    if (!sol) throw InvariantViolation("facet normals of a simplicial cone are dependent");
    return *sol;
}

}  // namespace nestocone
