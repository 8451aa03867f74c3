#include "nestocone/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

// Tube enumeration scans all 2^n subsets.
constexpr int kMaxTubeVertices = 24;

std::string edge_text(Vertex u, Vertex v) { return "[" + std::to_string(u) + "," + std::to_string(v) + "]"; }

// Bron-Kerbosch with Tomita pivoting over a dense boolean adjacency matrix.
class CliqueEnumerator {
public:
    explicit CliqueEnumerator(const std::vector<std::vector<bool>>& adj) : adj_(adj) {}

    std::vector<std::vector<std::size_t>> run() {
        std::vector<std::size_t> p(adj_.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
        std::vector<std::size_t> r;
        expand(r, p, {});
        return std::move(out_);
    }

private:
    void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
            out_.push_back(r);
            return;
        }
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        for (const auto* pool : {&p, &x}) {
            for (std::size_t u : *pool) {
                std::size_t cnt = 0;
                for (std::size_t w : p) cnt += adj_[u][w] ? 1 : 0;
                if (!have_pivot || cnt > best) {
                    pivot = u;
                    best = cnt;
                    have_pivot = true;
                }
            }
        }
        std::vector<std::size_t> candidates;
        for (std::size_t v : p)
            if (!adj_[pivot][v]) candidates.push_back(v);
        for (std::size_t v : candidates) {
            std::vector<std::size_t> p2;
            std::vector<std::size_t> x2;
            for (std::size_t w : p)
                if (adj_[v][w]) p2.push_back(w);
            for (std::size_t w : x)
                if (adj_[v][w]) x2.push_back(w);
            r.push_back(v);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    const std::vector<std::vector<bool>>& adj_;
    std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 1 || n > kMaxVertices) throw InputError("graph size " + std::to_string(n) + " out of range");
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) throw InputError("edge " + edge_text(a, b) + " out of range");
        if (a == b) throw InputError("loop at vertex " + std::to_string(a));
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) throw InputError("duplicate edge " + edge_text(e.first, e.second));
        adjacency_[static_cast<std::size_t>(a - 1)] |= VertexSet::singleton(b);
        adjacency_[static_cast<std::size_t>(b - 1)] |= VertexSet::singleton(a);
    }
    edges_.assign(seen.begin(), seen.end());
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(n, 1);
    return Graph(n, e);
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::star(int n) {
    std::vector<Edge> e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph(n, e);
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

bool Graph::is_connected(VertexSet s) const {
    if (s.empty()) return false;
    VertexSet reached = VertexSet::singleton(s.min());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](Vertex v) { next |= neighbors(v) & s; });
        frontier = next - reached;
        reached |= frontier;
    }
    return reached == s;
}

std::vector<VertexSet> Graph::components(VertexSet s) const {
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::singleton(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](Vertex v) { next |= neighbors(v) & rest; });
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        rest = rest - comp;
    }
    sort_canonical(out);
    return out;
}

void require_tube(const Graph& g, Tube t) {
    if (t.empty()) throw InvalidTubeError("empty set is not a tube");
    if (!t.subset_of(g.vertices())) throw InvalidTubeError("tube " + t.label() + " leaves the vertex set");
    if (!g.is_connected(t)) throw InvalidTubeError(t.label() + " does not induce a connected subgraph");
}

std::vector<Tube> enumerate_tubes(const Graph& g) {
    if (g.n() > kMaxTubeVertices) throw InputError("tube enumeration limited to " + std::to_string(kMaxTubeVertices) + " vertices");
    std::vector<Tube> tubes;
    const std::uint64_t limit = std::uint64_t{1} << g.n();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        const auto s = VertexSet::from_bits(bits);
        if (g.is_connected(s)) tubes.push_back(s);
    }
    sort_canonical(tubes);
    return tubes;
}

VertexSet non_disconnecting(const Graph& g, Tube t) {
    require_tube(g, t);
    VertexSet out;
    t.for_each([&](Vertex v) {
        const auto rest = t.without(v);
        if (rest.empty() || g.is_connected(rest)) out = out.with(v);
    });
    return out;
}

bool tubes_compatible(const Graph& g, Tube t, Tube t2) {
    require_tube(g, t);
    require_tube(g, t2);
    if (t.subset_of(t2) || t2.subset_of(t)) return true;
    if (t.intersects(t2)) return false;
    return !g.is_connected(t | t2);
}

std::vector<std::vector<Tube>> enumerate_maximal_tubings(const Graph& g) {
    const auto tubes = enumerate_tubes(g);
    std::vector<std::vector<bool>> adj(tubes.size(), std::vector<bool>(tubes.size(), false));
    for (std::size_t i = 0; i < tubes.size(); ++i)
        for (std::size_t j = i + 1; j < tubes.size(); ++j)
            adj[i][j] = adj[j][i] = tubes_compatible(g, tubes[i], tubes[j]);

    std::vector<std::vector<Tube>> out;
    for (auto& clique : CliqueEnumerator(adj).run()) {
        std::sort(clique.begin(), clique.end());
        std::vector<Tube> tubing;
        tubing.reserve(clique.size());
        for (std::size_t i : clique) tubing.push_back(tubes[i]);
        out.push_back(std::move(tubing));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
    });
    return out;
}

std::vector<GraphicalPair> graphical_maximal_pairs(const Graph& g) {
    std::vector<GraphicalPair> out;
    for (Tube s : enumerate_tubes(g)) {
        const auto nd = non_disconnecting(g, s).to_vector();
        for (std::size_t i = 0; i < nd.size(); ++i)
            for (std::size_t j = i + 1; j < nd.size(); ++j)
                out.push_back({s.without(nd[j]), s.without(nd[i]), s, nd[i], nd[j]});
    }
    return out;
}

bool is_disjoint_union_of_paths(const Graph& g) {
    for (Vertex v = 1; v <= g.n(); ++v)
        if (g.neighbors(v).size() > 2) return false;
    const auto comps = g.components();
    return g.edges().size() + comps.size() == static_cast<std::size_t>(g.n());
}

}  // namespace nestocone
