#include "nestocone/typecone.hpp"

#include <algorithm>
#include <numeric>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

VertexSet interval(int i, int j) { return VertexSet::range(j) - VertexSet::range(i - 1); }

bool is_interval(VertexSet s) { return !s.empty() && s == interval(s.min(), s.max()); }

void add_components(const BuildingSet& b, std::vector<long long>& v, VertexSet u, long long sign) {
    for (Block k : components_of(b, u)) v[b.index(k)] += sign;
}

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

GVector gvector(const BuildingSet& b, Block x) {
    b.require_block(x);
    GVector g(static_cast<std::size_t>(b.n()), 0);
    x.for_each([&](Vertex v) { g[static_cast<std::size_t>(v - 1)] = 1; });
    return g;
}

Inequality canonical_inequality(const BuildingSet& b, std::vector<long long> raw) {
    if (raw.size() != b.size()) throw InvariantViolation("inequality length differs from the block count");
    for (Block k : b.components()) raw[b.index(k)] = 0;
    long long g = 0;
    for (long long c : raw) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw InvariantViolation("inequality vanishes once components are pinned");
    for (long long& c : raw) c /= g;
    return Inequality{std::move(raw)};
}

ConeDescription make_cone(const BuildingSet& b, std::vector<Inequality> inequalities) {
    std::sort(inequalities.begin(), inequalities.end());
    inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());
    return ConeDescription{b, b.components(), std::move(inequalities)};
}

std::vector<long long> frame_normal(const BuildingSet& b, Block x, Block y, Block parent) {
    std::vector<long long> v(b.size(), 0);
    v[b.index(x)] += 1;
    v[b.index(y)] += 1;
    add_components(b, v, parent - (x | y), 1);
    v[b.index(parent)] -= 1;
    add_components(b, v, x & y, -1);
    return v;
}

Inequality wall_inequality(const BuildingSet& b, const ExchangeFrame& f) {
    if (!is_exchange_frame(b, f))
        throw InputError("(" + f.b_out.label() + ", " + f.b_in.label() + ", " + f.parent.label() +
                         ") with pivots (" + std::to_string(f.pivot_out) + ", " + std::to_string(f.pivot_in) +
                         ") is not an exchange frame");
    return canonical_inequality(b, frame_normal(b, f.b_out, f.b_in, f.parent));
}

ConeDescription redundant_cone(const BuildingSet& b) {
    std::vector<Inequality> out;
    for (const auto& s : enumerate_maximal_nested_sets(b))
        for (const auto& f : flips(b, s))
            out.push_back(canonical_inequality(b, frame_normal(b, f.frame.b_out, f.frame.b_in, f.frame.parent)));
    return make_cone(b, std::move(out));
}

ConeDescription facet_cone(const BuildingSet& b) {
    std::vector<Inequality> out;
    for (Block p : b.blocks()) {
        if (p.size() < 2) continue;
        const auto mu = maximal_strict_subblocks(b, p);
        if (is_elementary(b, p)) {
            std::vector<long long> v(b.size(), 0);
            for (Block m : mu) v[b.index(m)] += 1;
            v[b.index(p)] -= 1;
            out.push_back(canonical_inequality(b, std::move(v)));
            continue;
        }
        for (std::size_t i = 0; i < mu.size(); ++i)
            for (std::size_t j = i + 1; j < mu.size(); ++j)
                out.push_back(canonical_inequality(b, frame_normal(b, mu[i], mu[j], p)));
    }
    return make_cone(b, std::move(out));
}

ConeDescription graphical_facet_cone(const Graph& g) {
    const auto b = graphical_building(g);
    std::vector<Inequality> out;
    for (const auto& t : graphical_maximal_pairs(g)) {
        std::vector<long long> v(b.size(), 0);
        v[b.index(t.first)] += 1;
        v[b.index(t.second)] += 1;
        v[b.index(t.parent)] -= 1;
        for (VertexSet k : g.components(t.parent.without(t.v).without(t.v2))) v[b.index(k)] -= 1;
        out.push_back(canonical_inequality(b, std::move(v)));
    }
    return make_cone(b, std::move(out));
}

long long facet_count(const BuildingSet& b) {
    long long total = 0;
    for (Block p : b.blocks()) {
        if (p.size() < 2) continue;
        if (is_elementary(b, p))
            total += 1;
        else
            total += choose2(static_cast<long long>(maximal_strict_subblocks(b, p).size()));
    }
    return total;
}

long long graphical_facet_count(const Graph& g) {
    long long total = 0;
    for (Tube t : enumerate_tubes(g)) total += choose2(non_disconnecting(g, t).size());
    return total;
}

bool is_simplicial(const BuildingSet& b) {
    for (Block p : b.blocks()) {
        if (p.size() < 2) continue;
        if (maximal_strict_subblocks(b, p).size() >= 3 && !is_elementary(b, p)) return false;
    }
    return true;
}

long long ray_count(const BuildingSet& b) {
    return static_cast<long long>(b.size()) - static_cast<long long>(b.components().size());
}

long long fan_dimension(const BuildingSet& b) {
    return b.ground().size() - static_cast<long long>(b.components().size());
}

HeightVector raw_classic_height(const BuildingSet& b, HeightVariant variant) {
    HeightVector h;
    h.reserve(b.size());
    for (Block x : b.blocks()) {
        if (variant == HeightVariant::devadoss) {
            Integer p = 1;
            for (int i = 0; i < x.size(); ++i) p *= 3;
            h.emplace_back(-p);
        } else {
            const auto below = std::count_if(b.blocks().begin(), b.blocks().end(),
                                             [&](Block c) { return c.subset_of(x); });
            h.emplace_back(-static_cast<long long>(below));
        }
    }
    return h;
}

HeightVector normalize_height(const BuildingSet& b, const HeightVector& h) {
    if (h.size() != b.size()) throw InputError("height vector has the wrong length");
    HeightVector out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Block x = b.blocks()[i];
        const Block k = b.component_of(x);
        out[i] = h[i] - h[b.index(k)] * Rational(x.size(), k.size());
    }
    return out;
}

HeightVector classic_height(const BuildingSet& b, HeightVariant variant) {
    return normalize_height(b, raw_classic_height(b, variant));
}

Rational evaluate(const Inequality& ineq, const HeightVector& h) {
    if (ineq.coeffs.size() != h.size()) throw InputError("height vector has the wrong length");
    Rational total = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (ineq.coeffs[i] != 0) total += h[i] * ineq.coeffs[i];
    return total;
}

Membership cone_membership(const ConeDescription& c, const HeightVector& h) {
    const auto& b = c.building;
    if (h.size() != b.size())
        throw InputError("height vector has " + std::to_string(h.size()) + " entries, expected " +
                         std::to_string(b.size()));
    for (Block k : c.equalities)
        if (h[b.index(k)] != 0) throw InputError("height of component " + k.label() + " must be 0");
    bool tight = false;
    for (const auto& ineq : c.inequalities) {
        const Rational v = evaluate(ineq, h);
        if (v < 0) return Membership::outside;
        if (v == 0) tight = true;
    }
    return tight ? Membership::boundary : Membership::interior;
}

Membership height_membership(const BuildingSet& b, const HeightVector& h) {
    return cone_membership(facet_cone(b), h);
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::interior: return "interior";
        case Membership::boundary: return "boundary";
        case Membership::outside: return "outside";
    }
    return "outside";
}

std::string format_inequality(const BuildingSet& b, const Inequality& ineq) {
    std::vector<std::pair<Block, long long>> pos;
    std::vector<std::pair<Block, long long>> neg;
    for (std::size_t i = 0; i < ineq.coeffs.size(); ++i) {
        const long long c = ineq.coeffs[i];
        if (c > 0) pos.emplace_back(b.blocks()[i], c);
        if (c < 0) neg.emplace_back(b.blocks()[i], -c);
    }
    auto side = [](std::vector<std::pair<Block, long long>>& terms) {
        std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
            if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
            return canonical_less(x.first, y.first);
        });
        if (terms.empty()) return std::string("0");
        std::string out;
        for (const auto& [blk, c] : terms) {
            if (!out.empty()) out += " + ";
            if (c != 1) out += std::to_string(c) + " ";
            out += "h" + blk.label();
        }
        return out;
    };
    return side(pos) + " > " + side(neg);
}

bool is_interval_building(const BuildingSet& b) {
    if (b.ground() != VertexSet::range(b.n())) return false;
    return std::all_of(b.blocks().begin(), b.blocks().end(), is_interval);
}

IntervalProfile interval_profile(const BuildingSet& b) {
    if (b.ground() != VertexSet::range(b.n()))
        throw NotIntervalError("ground set " + b.ground().label() + " is not {1.." + std::to_string(b.n()) + "}");
    for (Block x : b.blocks())
        if (!is_interval(x)) throw NotIntervalError("block " + x.label() + " is not an interval");

    // r(a, c): largest k in [a, c-1] with [a, k] a block.
    auto right_of = [&](int a, int c) {
        for (int k = c - 1; k >= a; --k)
            if (b.contains(interval(a, k))) return k;
        throw InvariantViolation("missing singleton interval");
    };
    // ℓ(a, c): smallest k in [a+1, c] with [k, c] a block.
    auto left_of = [&](int a, int c) {
        for (int k = a + 1; k <= c; ++k)
            if (b.contains(interval(k, c))) return k;
        throw InvariantViolation("missing singleton interval");
    };

    std::vector<IntervalRow> rows;
    std::vector<Inequality> ineqs;
    for (Block x : b.blocks()) {
        if (x.size() < 2) continue;
        IntervalRow row;
        row.block = x;
        row.i = x.min();
        row.j = x.max();
        row.left = left_of(row.i, row.j);
        row.right = right_of(row.i, row.j);
        std::vector<long long> v(b.size(), 0);
        if (row.right < row.left) {
            row.elementary = true;
            row.sequence = {row.i, row.right + 1};
            while (row.sequence.back() != row.j + 1)
                row.sequence.push_back(right_of(row.sequence.back(), row.j + 1) + 1);
            for (std::size_t k = 1; k < row.sequence.size(); ++k)
                v[b.index(interval(row.sequence[k - 1], row.sequence[k] - 1))] += 1;
            v[b.index(x)] -= 1;
        } else {
            row.sequence = {row.left};
            while (row.sequence.back() != row.right + 1)
                row.sequence.push_back(right_of(row.sequence.back(), row.right + 1) + 1);
            v[b.index(interval(row.i, row.right))] += 1;
            v[b.index(interval(row.left, row.j))] += 1;
            v[b.index(x)] -= 1;
            for (std::size_t k = 1; k < row.sequence.size(); ++k)
                v[b.index(interval(row.sequence[k - 1], row.sequence[k] - 1))] -= 1;
        }
        row.inequality = canonical_inequality(b, std::move(v));
        ineqs.push_back(row.inequality);
        rows.push_back(std::move(row));
    }
    return IntervalProfile{std::move(rows), make_cone(b, std::move(ineqs))};
}

}  // namespace nestocone
