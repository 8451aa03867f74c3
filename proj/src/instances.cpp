#include "nestocone/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

VertexSet interval(int i, int j) { return VertexSet::range(j) - VertexSet::range(i - 1); }

// Adjacency bit for the pair (i, j), i < j, 0-based.
int pair_bit(int i, int j, int n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

// Whether no relabeling yields a smaller edge code.
bool is_canonical(std::uint64_t code, int n, const std::vector<std::vector<int>>& perms) {
    for (const auto& p : perms) {
        std::uint64_t image = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((code >> pair_bit(i, j, n)) & 1U) {
                    const int a = std::min(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
                    const int c = std::max(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
                    image |= std::uint64_t{1} << pair_bit(a, c, n);
                }
        if (image < code) return false;
    }
    return true;
}

Graph decode(std::uint64_t code, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> pair_bit(i, j, n)) & 1U) edges.emplace_back(i + 1, j + 1);
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
    if (n < 1 || n > 6) throw InputError("isomorphism classes are generated for 1 to 6 vertices");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint64_t> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        if (is_canonical(code, n, perms)) classes.insert(code);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : classes) {
        Graph g = decode(code, n);
        if (!connected_only || g.is_connected(g.vertices())) out.push_back(std::move(g));
    }
    return out;
}

BuildingSet random_building_closure(std::mt19937_64& rng) {
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Block> gens;
    for (int e = 0; e < count; ++e) {
        const int size = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 1);
        std::shuffle(vs.begin(), vs.end(), rng);
        vs.resize(static_cast<std::size_t>(size));
        gens.push_back(VertexSet::from_vector(vs));
    }
    return BuildingSet::closure(n, gens);
}

BuildingSet random_interval_building(std::mt19937_64& rng, int n) {
    const int count = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<Block> gens;
    for (int e = 0; e < count; ++e) {
        int i = std::uniform_int_distribution<int>(1, n)(rng);
        int j = std::uniform_int_distribution<int>(1, n)(rng);
        if (i > j) std::swap(i, j);
        gens.push_back(interval(i, j));
    }
    return BuildingSet::closure(n, gens);
}

BuildingSet all_intervals(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) blocks.push_back(interval(i, j));
    return BuildingSet::from_blocks(n, blocks);
}

BuildingSet pitman_stanley(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back(VertexSet::singleton(i));
        blocks.push_back(interval(1, i));
    }
    return BuildingSet::from_blocks(n, blocks);
}

BuildingSet bcirc() {
    std::vector<Block> blocks;
    for (Vertex v = 1; v <= 9; ++v) blocks.push_back(VertexSet::singleton(v));
    for (auto list : std::initializer_list<std::initializer_list<Vertex>>{
             {1, 4}, {2, 5}, {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 4, 5, 6},
             {2, 4, 5, 6}, {1, 2, 3, 4, 5}, {1, 2, 4, 5, 6}, {1, 2, 3, 4, 5, 6}})
        blocks.push_back(VertexSet::of(list));
    return BuildingSet::from_blocks(9, blocks);
}

NestedSet bcirc_nested() {
    return NestedSet({VertexSet::of({3}), VertexSet::of({4}), VertexSet::of({5}), VertexSet::of({7}),
                      VertexSet::of({8}), VertexSet::of({1, 4}), VertexSet::of({7, 8, 9}),
                      VertexSet::of({1, 2, 3, 4, 5}), VertexSet::of({1, 2, 3, 4, 5, 6})});
}

NestedSet bcirc_nested_prime() {
    return NestedSet({VertexSet::of({3}), VertexSet::of({4}), VertexSet::of({5}), VertexSet::of({7}),
                      VertexSet::of({8}), VertexSet::of({2, 5}), VertexSet::of({7, 8, 9}),
                      VertexSet::of({1, 2, 3, 4, 5}), VertexSet::of({1, 2, 3, 4, 5, 6})});
}

}  // namespace nestocone
