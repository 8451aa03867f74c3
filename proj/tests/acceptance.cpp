// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nestocone/instances.hpp"
#include "nestocone/io.hpp"
#include "nestocone/oracle.hpp"
#include "nestocone/realize.hpp"
#include "reference.hpp"

using namespace nestocone;

namespace {

VertexSet S(std::initializer_list<Vertex> vs) { return VertexSet::of(vs); }

/// Collects failed expectations for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.emplace_back();
    }
};

bool run(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds)
        c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    const bool ok = c.failures.empty();
    std::ostringstream line;
    line << "criterion " << id << " " << (ok ? "PASS" : "FAIL") << ": " << title << " (" << c.count << " checks, "
         << static_cast<long long>(secs * 1000) << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures)
        if (!f.empty()) std::cout << "    " << f << "\n";
    return ok;
}

std::vector<std::string> texts(const ConeDescription& c) {
    std::vector<std::string> out;
    for (const auto& i : c.inequalities) out.push_back(format_inequality(c.building, i));
    std::sort(out.begin(), out.end());
    return out;
}

/// A graph is a disjoint union of paths iff every degree is at most 2 and it is a forest.
bool union_of_paths_reference(const Graph& g) {
    std::vector<int> degree(static_cast<std::size_t>(g.n() + 1), 0);
    for (auto [u, v] : g.edges()) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 2; })) return false;
    const auto comps = reference::components(g, g.vertices());
    return g.edges().size() + comps.size() == static_cast<std::size_t>(g.n());
}

std::string name(const Graph& g, const char* family) {
    return std::string(family) + "(" + std::to_string(g.n()) + ")";
}

/// Instances gathered by criteria 1–6, reused by 7 and 8.
std::vector<BuildingSet> pool;

void remember(const BuildingSet& b) {
    if (std::find(pool.begin(), pool.end(), b) == pool.end()) pool.push_back(b);
}

}  // namespace

int main() {
    bool all = true;

    all &= run(1, "family facet counts for complete graphs, paths, cycles and stars", 10, [](Check& c) {
        for (int n = 3; n <= 7; ++n) {
            const long long c2 = reference::choose(n, 2);
            const auto kn = graphical_building(Graph::complete(n));
            const auto pn = graphical_building(Graph::path(n));
            const auto cn = graphical_building(Graph::cycle(n));
            const auto sn = graphical_building(Graph::star(n));
            c.expect(facet_count(kn) == (1LL << (n - 2)) * c2, name(Graph::complete(n), "complete"));
            c.expect(facet_count(pn) == c2, name(Graph::path(n), "path"));
            c.expect(facet_count(cn) == 3 * c2 - n, name(Graph::cycle(n), "cycle"));
            c.expect(facet_count(sn) == n - 1 + (1LL << (n - 3)) * reference::choose(n - 1, 2),
                     name(Graph::star(n), "star"));
            for (const auto& b : {kn, pn, cn, sn}) remember(b);
        }
    });

    all &= run(2, "facet description equals the irredundant brute-force cone", 300, [](Check& c) {
        std::vector<BuildingSet> cases;
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : graphs_up_to_isomorphism(n, true)) cases.push_back(graphical_building(g));
        std::mt19937_64 rng(2024);
        for (int k = 0; k < 60; ++k) cases.push_back(random_building_closure(rng));
        for (const auto& b : cases) {
            c.expect(b.ground().size() <= 6, "ground set too large");
            c.expect(cone_equal(facet_cone(b), irredundant(brute_cone(b))), to_json(b).dump());
            remember(b);
        }
    });

    all &= run(3, "worked example: components, elementary blocks, flip, walls, roots", 0, [](Check& c) {
        const auto b = bcirc();
        const auto s = bcirc_nested();
        const auto s2 = bcirc_nested_prime();
        c.expect(b.components() == std::vector<Block>{S({7, 8, 9}), S({1, 2, 3, 4, 5, 6})}, "components");
        c.expect(elementary_blocks(b) ==
                     std::vector<Block>{S({1, 4}), S({2, 5}), S({1, 2, 3}), S({4, 5, 6}), S({7, 8, 9})},
                 "elementary blocks");
        c.expect(is_maximal_nested_set(b, s) && is_maximal_nested_set(b, s2), "maximal nested sets");
        c.expect(adjacent(s, s2), "adjacency");
        const auto fs = flips(b, s);
        const auto it = std::find_if(fs.begin(), fs.end(), [&](const Flip& f) { return f.result == s2; });
        c.expect(it != fs.end(), "flip to the adjacent nested set");
        if (it != fs.end()) {
            c.expect(it->frame.b_out == S({1, 4}) && it->frame.b_in == S({2, 5}) &&
                         it->frame.parent == S({1, 2, 3, 4, 5}),
                     "frame (14, 25, 12345)");
            c.expect(it->frame.pivot_out == 1 && it->frame.pivot_in == 2, "pivots (1, 2)");
            c.expect(format_inequality(b, wall_inequality(b, it->frame)) == "h14 + h25 + h3 > h12345",
                     "wall h14 + h25 + h3 > h12345");
        }
        c.expect(format_inequality(b, flip_dependence(b, s, s2)) == "h14 + h25 + h3 > h12345",
                 "dependence of the flip");
        const auto ws = exchange_witnesses(b, S({1, 4}), S({2, 5}));
        const ExchangeWitness second{S({1, 2, 4, 5, 6}), 4, 5};
        c.expect(std::find(ws.begin(), ws.end(), second) != ws.end(), "witness (12456, 4, 5)");
        c.expect(format_inequality(b, wall_inequality(b, {S({1, 4}), S({2, 5}), S({1, 2, 4, 5, 6}), 4, 5})) ==
                     "h14 + h25 + h6 > h12456",
                 "wall h14 + h25 + h6 > h12456");
        c.expect(root_of(s, S({1, 4})) == S({1}), "root of 14");
        c.expect(root_of(s, S({1, 2, 3, 4, 5})) == S({2}), "root of 12345");
        c.expect(root_of(s2, S({1, 2, 3, 4, 5})) == S({1}), "root of 12345 after the flip");
        c.expect(root_of(s2, S({2, 5})) == S({2}), "root of 25 after the flip");
    });

    all &= run(4, "worked example type cone: 19 rays, dimension 7, 12 facets, simplicial", 0, [](Check& c) {
        const auto b = bcirc();
        remember(b);
        c.expect(ray_count(b) == 19, "rays");
        c.expect(fan_dimension(b) == 7, "dimension");
        c.expect(facet_count(b) == 12, "facet count");
        c.expect(is_simplicial(b), "simplicial");
        std::vector<std::string> expected = {
            "h1 + h4 > h14",           "h2 + h5 > h25",           "h1 + h2 + h3 > h123",
            "h4 + h5 + h6 > h456",     "h7 + h8 + h9 > 0",        "h123 + h14 > h1234 + h1",
            "h123 + h25 > h1235 + h2", "h456 + h14 > h1456 + h4", "h456 + h25 > h2456 + h5",
            "h1234 + h1235 > h12345 + h123", "h1456 + h2456 > h12456 + h456", "h12345 + h12456 > h14 + h25"};
        std::sort(expected.begin(), expected.end());
        const auto fc = facet_cone(b);
        c.expect(texts(fc) == expected, "facet list");
        c.expect(cone_equal(fc, irredundant(brute_cone(b))), "oracle agreement");
    });

    all &= run(5, "maximal nested sets: Catalan numbers for paths, factorials for complete graphs", 0, [](Check& c) {
        for (int n = 1; n <= 6; ++n) {
            const auto pn = graphical_building(Graph::path(n));
            const auto kn = graphical_building(Graph::complete(n));
            c.expect(enumerate_maximal_nested_sets(pn).size() == reference::catalan(n), name(Graph::path(n), "path"));
            c.expect(enumerate_maximal_nested_sets(kn).size() == reference::factorial(n),
                     name(Graph::complete(n), "complete"));
            c.expect(reference::maximal_tubing_count(Graph::path(n)) == reference::catalan(n), "reference recursion");
            remember(pn);
            remember(kn);
        }
    });

    all &= run(6, "simpliciality: unions of paths and interval building sets", 0, [](Check& c) {
        for (int n = 1; n <= 6; ++n)
            for (const auto& g : graphs_up_to_isomorphism(n, false)) {
                const auto b = graphical_building(g);
                c.expect(is_simplicial(b) == union_of_paths_reference(g), to_json(g).dump());
                remember(b);
            }
        std::mt19937_64 rng(7);
        for (int k = 0; k < 30; ++k) {
            const auto b = random_interval_building(rng, 1 + k % 7);
            c.expect(is_simplicial(b), "interval building " + to_json(b).dump());
            c.expect(interval_profile(b).cone.inequalities == facet_cone(b).inequalities,
                     "interval profile " + to_json(b).dump());
            remember(b);
        }
    });

    all &= run(7, "classic heights lie in the open type cone", 0, [](Check& c) {
        for (const auto& b : pool)
            for (auto v : {HeightVariant::devadoss, HeightVariant::postnikov})
                c.expect(height_membership(b, classic_height(b, v)) == Membership::interior, to_json(b).dump());
    });

    all &= run(8, "realizations: vertices, tight sets and edges match nested sets and flips", 0, [](Check& c) {
        for (const auto& b : pool) {
            if (b.ground().size() > 5) continue;
            const auto sets = enumerate_maximal_nested_sets(b);
            const std::set<NestedSet> expected(sets.begin(), sets.end());
            std::set<std::pair<NestedSet, NestedSet>> flip_pairs;
            for (const auto& s : sets)
                for (const auto& f : flips(b, s)) flip_pairs.emplace(std::min(s, f.result), std::max(s, f.result));
            for (auto v : {HeightVariant::devadoss, HeightVariant::postnikov}) {
                const auto h = classic_height(b, v);
                const auto poly = realize_polytope(b, h);
                const std::set<NestedSet> labels(poly.labels.begin(), poly.labels.end());
                const std::set<RowVector> points(poly.vertices.begin(), poly.vertices.end());
                c.expect(labels == expected && points.size() == sets.size(), "one vertex per nested set");
                for (std::size_t i = 0; i < poly.vertices.size(); ++i)
                    c.expect(tight_blocks(b, h, poly.vertices[i]) == poly.labels[i].blocks, "tight blocks");
                std::set<std::pair<NestedSet, NestedSet>> edges;
                for (auto [i, j] : poly.edges)
                    edges.emplace(std::min(poly.labels[i], poly.labels[j]), std::max(poly.labels[i], poly.labels[j]));
                c.expect(edges == flip_pairs, "edges are flips");
            }
        }
    });

    all &= run(9, "kinematic realizations of interval building sets", 30, [](Check& c) {
        for (int n = 1; n <= 5; ++n) {
            const auto b = all_intervals(n);
            const auto poly = kinematic_polytope(b, RowVector(static_cast<std::size_t>(facet_count(b)), Rational(1)));
            c.expect(poly.vertices.size() == reference::catalan(n), "vertex count for n = " + std::to_string(n));
            const auto sets = enumerate_maximal_nested_sets(b);
            const std::set<NestedSet> labels(poly.labels.begin(), poly.labels.end());
            c.expect(labels == std::set<NestedSet>(sets.begin(), sets.end()) && labels.size() == poly.labels.size(),
                     "zero sets are the maximal nested sets");
            for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
                // Coordinates are indexed by the non-component blocks; zeros mark members.
                std::size_t axis = 0;
                for (Block blk : b.blocks()) {
                    if (b.is_component(blk)) continue;
                    c.expect((poly.vertices[i][axis] == 0) == poly.labels[i].contains(blk), "zero pattern");
                    c.expect(poly.vertices[i][axis] >= 0, "nonnegative");
                    ++axis;
                }
            }
        }
        c.expect(kinematic_polytope(pitman_stanley(3), RowVector(2, Rational(1))).vertices.size() == 4,
                 "initial intervals of [3]");
    });

    all &= run(10, "vertex counts agree with Minkowski sums of simplices", 0, [](Check& c) {
        for (int n = 1; n <= 4; ++n)
            for (const auto& g : graphs_up_to_isomorphism(n, false)) {
                const auto b = graphical_building(g);
                const auto poly = realize_polytope(b, classic_height(b, HeightVariant::postnikov));
                c.expect(poly.vertices.size() == minkowski_vertex_count(b), to_json(g).dump());
            }
    });

    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? 0 : 1;
}
