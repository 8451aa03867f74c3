#pragma once

#include <utility>
#include <vector>

#include "nestocone/vertex_set.hpp"

namespace nestocone {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on {1, ..., n}.
class Graph {
public:
    /// Throws InputError on loops, out-of-range endpoints or duplicate edges.
    Graph(int n, const std::vector<Edge>& edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    /// Vertex 1 is the center.
    static Graph star(int n);
    static Graph edgeless(int n);

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    /// Sorted pairs (u, v) with u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    /// Whether the induced subgraph on a nonempty set is connected.
    bool is_connected(VertexSet s) const;
    /// Vertex sets of the connected components of the subgraph induced on s.
    std::vector<VertexSet> components(VertexSet s) const;
    std::vector<VertexSet> components() const { return components(vertices()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adjacency_;
};

using Tube = VertexSet;

/// Throws InvalidTubeError unless t is a nonempty connected subset of the vertices.
void require_tube(const Graph& g, Tube t);

/// All tubes in canonical order; includes the connected components.
std::vector<Tube> enumerate_tubes(const Graph& g);

/// Vertices v of t such that t \ {v} is empty or connected.
VertexSet non_disconnecting(const Graph& g, Tube t);

/// Nested, or disjoint with a union that is not a tube.
bool tubes_compatible(const Graph& g, Tube t, Tube t2);

/// Maximal cliques of the tube compatibility graph, each sorted canonically,
/// the list sorted lexicographically.
std::vector<std::vector<Tube>> enumerate_maximal_tubings(const Graph& g);

/// (s \ {v'}, s \ {v}, s) for a tube s and two distinct non-disconnecting vertices v < v'.
struct GraphicalPair {
    Tube first;
    Tube second;
    Tube parent;
    Vertex v;
    Vertex v2;
};

std::vector<GraphicalPair> graphical_maximal_pairs(const Graph& g);

/// Every component is a path (max degree <= 2, no cycles).
bool is_disjoint_union_of_paths(const Graph& g);

}  // namespace nestocone
