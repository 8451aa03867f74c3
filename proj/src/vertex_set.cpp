#include "nestocone/vertex_set.hpp"

#include <algorithm>

#include "nestocone/errors.hpp"

namespace nestocone {

VertexSet VertexSet::of(std::initializer_list<Vertex> vs) { return from_vector(std::vector<Vertex>(vs)); }

VertexSet VertexSet::from_vector(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) {
        if (v < 1 || v > kMaxVertices) throw InputError("vertex " + std::to_string(v) + " out of range");
        s = s.with(v);
    }
    return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::string VertexSet::label() const {
    const auto vs = to_vector();
    const bool compact = !vs.empty() && vs.back() < 10;
    std::string out = compact ? "" : "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(vs[i]);
    }
    if (!compact) out += '}';
    return out;
}

void sort_canonical(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), CanonicalLess{}); }

}  // namespace nestocone
