#include "nestocone/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

std::vector<Block> set_difference(const NestedSet& a, const NestedSet& b) {
    std::vector<Block> out;
    std::set_difference(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(), std::back_inserter(out),
                        CanonicalLess{});
    return out;
}

}  // namespace

bool adjacent(const NestedSet& s, const NestedSet& s2) {
    return s.size() == s2.size() && set_difference(s, s2).size() == 1;
}

RowVector flip_dependence_coefficients(const BuildingSet& b, const NestedSet& s, const NestedSet& s2) {
    for (const auto* x : {&s, &s2})
        if (!is_maximal_nested_set(b, *x)) throw InputError("not a maximal nested set");
    if (!adjacent(s, s2)) throw InputError("nested sets are not adjacent");
    const Block out_block = set_difference(s, s2).front();
    const Block in_block = set_difference(s2, s).front();

    std::vector<Block> cols;
    for (Block x : s.blocks)
        if (!b.is_component(x)) cols.push_back(x);
    cols.push_back(in_block);

    // Projected characteristic vectors χ_X − (|X|/|K|) χ_K as columns.
    const auto vertices = b.ground().to_vector();
    Matrix a(vertices.size(), RowVector(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Block k = b.component_of(cols[c]);
        const Rational share(cols[c].size(), k.size());
        for (std::size_t r = 0; r < vertices.size(); ++r) {
            const Vertex v = vertices[r];
            Rational entry = cols[c].contains(v) ? Rational(1) : Rational(0);
            if (k.contains(v)) entry -= share;
            a[r][c] = entry;
        }
    }
    const auto basis = nullspace(a, cols.size());
    if (basis.size() != 1)
        throw InvariantViolation("dependence space of a flip has dimension " + std::to_string(basis.size()));
    RowVector alpha = basis.front();
    const auto pos_out = static_cast<std::size_t>(
        std::find(cols.begin(), cols.end(), out_block) - cols.begin());
    const Rational scale = alpha[pos_out] + alpha.back();
    if (scale == 0) throw InvariantViolation("exchanged blocks cancel in the flip dependence");
    RowVector coeffs(b.size(), Rational(0));
    for (std::size_t c = 0; c < cols.size(); ++c) coeffs[b.index(cols[c])] = alpha[c] * 2 / scale;
    return coeffs;
}

Inequality flip_dependence(const BuildingSet& b, const NestedSet& s, const NestedSet& s2) {
    const auto coeffs = flip_dependence_coefficients(b, s, s2);
    Integer lcm = 1;
    for (const auto& q : coeffs) {
        const Integer d = boost::multiprecision::denominator(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<long long> raw;
    raw.reserve(coeffs.size());
    for (const auto& q : coeffs) {
        const Rational scaled = q * lcm;
        raw.push_back(boost::multiprecision::numerator(scaled).convert_to<long long>());
    }
    return canonical_inequality(b, std::move(raw));
}

ConeDescription brute_cone(const BuildingSet& b) {
    const auto sets = enumerate_maximal_nested_sets(b);
    std::vector<Inequality> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (adjacent(sets[i], sets[j])) out.push_back(flip_dependence(b, sets[i], sets[j]));
    return make_cone(b, std::move(out));
}

bool supports_facet(const ConeDescription& c, std::size_t which) {
    const auto& b = c.building;
    std::vector<std::size_t> coords;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b.is_component(b.blocks()[k])) coords.push_back(k);
    const std::size_t d = coords.size();
    const std::size_t m = c.inequalities.size();
    // Variables: h = u − w (2d free-split columns), then one surplus per other inequality.
    LinearSystem sys;
    sys.cols = 2 * d + (m - 1);
    std::size_t surplus = 2 * d;
    for (std::size_t i = 0; i < m; ++i) {
        RowVector row(sys.cols, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            const long long v = c.inequalities[i].coeffs[coords[k]];
            row[k] = v;
            row[d + k] = -v;
        }
        if (i == which) {
            sys.rhs.emplace_back(0);
        } else {
            row[surplus++] = -1;
            sys.rhs.emplace_back(1);
        }
        sys.a.push_back(std::move(row));
    }
    return find_nonnegative_solution(sys).has_value();
}

ConeDescription irredundant(const ConeDescription& c) {
    // Inequalities are canonical and sorted, so duplicates are adjacent.
    ConeDescription merged = make_cone(c.building, c.inequalities);
    const std::size_t m = merged.inequalities.size();
    std::vector<char> keep(m, 0);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), m));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < m; i += workers) keep[i] = supports_facet(merged, i) ? 1 : 0;
        }));
    }
    for (auto& j : jobs) j.get();
    std::vector<Inequality> out;
    for (std::size_t i = 0; i < m; ++i)
        if (keep[i]) out.push_back(merged.inequalities[i]);
    return make_cone(c.building, std::move(out));
}

bool cone_equal(const ConeDescription& c1, const ConeDescription& c2) {
    if (!(c1.building == c2.building)) throw InputError("cones live over different building sets");
    auto sorted = [](std::vector<Inequality> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    auto eq1 = c1.equalities;
    auto eq2 = c2.equalities;
    sort_canonical(eq1);
    sort_canonical(eq2);
    return eq1 == eq2 && sorted(c1.inequalities) == sorted(c2.inequalities);
}

std::size_t minkowski_vertex_count(const BuildingSet& b) {
    auto order = b.ground().to_vector();
    std::set<std::vector<int>> vertices;
    do {
        // order[0] has the largest weight; each simplex is maximized at its
        // earliest vertex in the order.
        std::vector<int> point(static_cast<std::size_t>(b.n()), 0);
        for (Block x : b.blocks()) {
            const auto best = std::find_if(order.begin(), order.end(), [&](Vertex v) { return x.contains(v); });
            ++point[static_cast<std::size_t>(*best - 1)];
        }
        vertices.insert(std::move(point));
    } while (std::next_permutation(order.begin(), order.end()));
    return vertices.size();
}

}  // namespace nestocone
