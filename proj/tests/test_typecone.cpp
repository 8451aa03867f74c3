#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "nestocone/errors.hpp"
#include "nestocone/instances.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/typecone.hpp"
#include "reference.hpp"

using namespace nestocone;

namespace {

VertexSet S(std::initializer_list<Vertex> vs) { return VertexSet::of(vs); }

std::vector<std::string> texts(const ConeDescription& c) {
    std::vector<std::string> out;
    for (const auto& i : c.inequalities) out.push_back(format_inequality(c.building, i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<BuildingSet> instances() {
    std::vector<BuildingSet> out = {bcirc(), all_intervals(5), pitman_stanley(5)};
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n, false)) out.push_back(graphical_building(g));
    std::mt19937_64 rng(29);
    for (int k = 0; k < 40; ++k) out.push_back(random_building_closure(rng));
    return out;
}

}  // namespace

TEST_CASE("g-vectors are characteristic vectors") {
    const auto b = bcirc();
    CHECK(gvector(b, S({1, 4})) == GVector{1, 0, 0, 1, 0, 0, 0, 0, 0});
    CHECK(gvector(graphical_building(Graph::path(3)), S({1, 2})) == GVector{1, 1, 0});
    CHECK_THROWS_AS(gvector(b, S({1, 2})), InputError);
}

TEST_CASE("wall inequalities of the running example") {
    const auto b = bcirc();
    CHECK(format_inequality(b, wall_inequality(b, {S({1, 4}), S({2, 5}), S({1, 2, 3, 4, 5}), 1, 2})) ==
          "h14 + h25 + h3 > h12345");
    CHECK(format_inequality(b, wall_inequality(b, {S({1, 4}), S({2, 5}), S({1, 2, 4, 5, 6}), 4, 5})) ==
          "h14 + h25 + h6 > h12456");
    CHECK_THROWS_AS(wall_inequality(b, {S({1, 2, 3}), S({4, 5, 6}), S({1, 2, 3, 4, 5, 6}), 1, 4}), InputError);
    const auto p3 = graphical_building(Graph::path(3));
    CHECK(format_inequality(p3, wall_inequality(p3, {S({1, 2}), S({2, 3}), S({1, 2, 3}), 1, 3})) ==
          "h12 + h23 > h2");
}

TEST_CASE("characteristic vectors satisfy the exchange relation exactly") {
    for (const auto& b : instances()) {
        for (const auto& s : enumerate_maximal_nested_sets(b)) {
            for (const auto& f : flips(b, s)) {
                const auto raw = frame_normal(b, f.frame.b_out, f.frame.b_in, f.frame.parent);
                std::vector<long long> sum(static_cast<std::size_t>(b.n()), 0);
                for (std::size_t i = 0; i < raw.size(); ++i)
                    b.blocks()[i].for_each([&](Vertex v) { sum[static_cast<std::size_t>(v - 1)] += raw[i]; });
                CHECK(std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 0; }));
            }
        }
    }
}

TEST_CASE("redundant descriptions") {
    // The pentagon has five walls, one per pair of adjacent vertices.
    CHECK(texts(redundant_cone(graphical_building(Graph::path(3)))) ==
          sorted({"h1 + h2 > h12", "h2 + h3 > h23", "h12 + h23 > h2", "h12 + h3 > 0", "h23 + h1 > 0"}));
    CHECK(redundant_cone(BuildingSet::from_blocks(2, {S({1}), S({2})})).inequalities.empty());
    // The hexagon: six walls, all of them facets.
    const auto k3 = graphical_building(Graph::complete(3));
    CHECK(redundant_cone(k3).inequalities.size() == 6);
    CHECK(redundant_cone(k3).inequalities == facet_cone(k3).inequalities);
}

TEST_CASE("facet descriptions") {
    CHECK(texts(facet_cone(graphical_building(Graph::path(3)))) ==
          sorted({"h1 + h2 > h12", "h2 + h3 > h23", "h12 + h23 > h2"}));
    const auto b = bcirc();
    CHECK(texts(facet_cone(b)) == sorted({"h1 + h4 > h14", "h2 + h5 > h25", "h1 + h2 + h3 > h123",
                                          "h4 + h5 + h6 > h456", "h7 + h8 + h9 > 0", "h123 + h14 > h1234 + h1",
                                          "h123 + h25 > h1235 + h2", "h456 + h14 > h1456 + h4",
                                          "h456 + h25 > h2456 + h5", "h1234 + h1235 > h12345 + h123",
                                          "h1456 + h2456 > h12456 + h456", "h12345 + h12456 > h14 + h25"}));
    const auto c = facet_cone(b);
    CHECK(c.equalities == std::vector<Block>{S({7, 8, 9}), S({1, 2, 3, 4, 5, 6})});
}

TEST_CASE("facet descriptions are contained in the redundant ones and match the counts") {
    for (const auto& b : instances()) {
        const auto f = facet_cone(b);
        const auto r = redundant_cone(b);
        CHECK(std::includes(r.inequalities.begin(), r.inequalities.end(), f.inequalities.begin(),
                            f.inequalities.end()));
        CHECK(static_cast<long long>(f.inequalities.size()) == facet_count(b));
        CHECK(is_simplicial(b) == (facet_count(b) == ray_count(b) - fan_dimension(b)));
    }
}

TEST_CASE("graphical facet descriptions agree") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n, false)) {
            const auto b = graphical_building(g);
            CHECK(graphical_facet_cone(g).inequalities == facet_cone(b).inequalities);
            CHECK(graphical_facet_count(g) == facet_count(b));
            CHECK(is_simplicial(b) == is_disjoint_union_of_paths(g));
        }
}

TEST_CASE("mutualized frames") {
    for (const auto& b : instances()) {
        std::map<std::uint64_t, std::vector<Inequality>> by_parent;
        for (const auto& f : maximal_exchange_frames(b))
            by_parent[f.parent.bits()].push_back(wall_inequality(b, f));
        for (auto& [bits, normals] : by_parent) {
            const Block p = VertexSet::from_bits(bits);
            auto unique = normals;
            std::sort(unique.begin(), unique.end());
            unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
            if (is_elementary(b, p))
                CHECK(unique.size() == 1);
            else
                CHECK(unique.size() == normals.size());
        }
    }
}

TEST_CASE("family facet counts") {
    for (int n = 3; n <= 7; ++n) {
        const long long c2 = reference::choose(n, 2);
        CHECK(facet_count(graphical_building(Graph::complete(n))) == (1LL << (n - 2)) * c2);
        CHECK(facet_count(graphical_building(Graph::path(n))) == c2);
        CHECK(facet_count(graphical_building(Graph::cycle(n))) == 3 * c2 - n);
        CHECK(facet_count(graphical_building(Graph::star(n))) ==
              n - 1 + (1LL << (n - 3)) * reference::choose(n - 1, 2));
    }
    CHECK(facet_count(graphical_building(Graph::complete(4))) == 24);
    CHECK(facet_count(graphical_building(Graph::cycle(4))) == 14);
    CHECK(facet_count(graphical_building(Graph::star(4))) == 9);
}

TEST_CASE("simpliciality") {
    CHECK(is_simplicial(graphical_building(Graph::path(4))));
    CHECK_FALSE(is_simplicial(graphical_building(Graph::complete(3))));
    CHECK(is_simplicial(bcirc()));
    CHECK(ray_count(bcirc()) == 19);
    CHECK(fan_dimension(bcirc()) == 7);
    CHECK(facet_count(bcirc()) == 12);
}

TEST_CASE("classic heights") {
    const auto p3 = graphical_building(Graph::path(3));
    const auto post = raw_classic_height(p3, HeightVariant::postnikov);
    const auto dev = raw_classic_height(p3, HeightVariant::devadoss);
    CHECK(post[p3.index(S({1, 2}))] == -3);
    CHECK(dev[p3.index(S({1, 2}))] == -9);
    CHECK(post[p3.index(S({2}))] == -1);
    CHECK(dev[p3.index(S({2}))] == -3);
    const auto h = classic_height(p3, HeightVariant::devadoss);
    CHECK(h[p3.index(S({1, 2, 3}))] == 0);
    CHECK(h[p3.index(S({1}))] == 6);  // -3 + 27/3

    for (const auto& b : instances())
        for (auto v : {HeightVariant::devadoss, HeightVariant::postnikov}) {
            const auto hv = classic_height(b, v);
            for (Block k : b.components()) CHECK(hv[b.index(k)] == 0);
            CHECK(height_membership(b, hv) == Membership::interior);
        }
}

TEST_CASE("height membership") {
    const auto p3 = graphical_building(Graph::path(3));
    CHECK(height_membership(p3, HeightVector(p3.size(), Rational(0))) == Membership::boundary);
    HeightVector h(p3.size(), Rational(0));
    h[p3.index(S({1, 2}))] = 1;
    CHECK(height_membership(p3, h) == Membership::outside);
    CHECK_THROWS_AS(height_membership(p3, HeightVector(3, Rational(0))), InputError);
    HeightVector bad(p3.size(), Rational(0));
    bad[p3.index(S({1, 2, 3}))] = 1;
    CHECK_THROWS_AS(height_membership(p3, bad), InputError);
}

TEST_CASE("inequality formatting") {
    const auto b = bcirc();
    std::vector<long long> raw(b.size(), 0);
    raw[b.index(S({7}))] = 2;
    raw[b.index(S({8}))] = 2;
    raw[b.index(S({7, 8, 9}))] = 5;
    CHECK(format_inequality(b, canonical_inequality(b, raw)) == "h7 + h8 > 0");
    raw[b.index(S({8}))] = 4;
    CHECK(format_inequality(b, canonical_inequality(b, raw)) == "h7 + 2 h8 > 0");
    CHECK_THROWS_AS(canonical_inequality(b, std::vector<long long>(b.size(), 0)), InvariantViolation);
}

TEST_CASE("interval building sets") {
    for (int n = 2; n <= 6; ++n) {
        const auto b = all_intervals(n);
        const auto profile = interval_profile(b);
        for (const auto& row : profile.rows) {
            CHECK(row.left == row.i + 1);
            CHECK(row.right == row.j - 1);
            CHECK(row.elementary == (row.j == row.i + 1));
        }
        std::vector<std::string> expected;
        auto I = [](int i, int j) { return VertexSet::range(j) - VertexSet::range(i - 1); };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::vector<long long> raw(b.size(), 0);
                raw[b.index(I(i, j - 1))] += 1;
                raw[b.index(I(i + 1, j))] += 1;
                raw[b.index(I(i, j))] -= 1;
                if (j > i + 1) raw[b.index(I(i + 1, j - 1))] -= 1;
                expected.push_back(format_inequality(b, canonical_inequality(b, raw)));
            }
        CHECK(texts(profile.cone) == sorted(expected));
        CHECK(profile.cone.inequalities == facet_cone(b).inequalities);
    }
    const auto ps = pitman_stanley(4);
    CHECK(texts(interval_profile(ps).cone) == sorted({"h1 + h2 > h12", "h12 + h3 > h123", "h123 + h4 > 0"}));
    CHECK_THROWS_AS(interval_profile(graphical_building(Graph::complete(3))), NotIntervalError);

    std::mt19937_64 rng(31);
    for (int k = 0; k < 30; ++k) {
        const auto b = random_interval_building(rng, 1 + k % 7);
        CHECK(is_interval_building(b));
        CHECK(is_simplicial(b));
        CHECK(interval_profile(b).cone.inequalities == facet_cone(b).inequalities);
    }
}
