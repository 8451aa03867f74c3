#include "nestocone/io.hpp"

#include <fstream>
#include <sstream>

#include "nestocone/errors.hpp"

namespace nestocone {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected an integer or a rational string, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<Block> sets_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of vertex lists");
    std::vector<Block> out;
    for (const auto& e : j) out.push_back(set_from_json(e));
    return out;
}

int size_from_json(const Json& j) {
    const auto& n = member(j, "n");
    if (!n.is_number_integer()) throw InputError("\"n\" must be an integer");
    return n.get<int>();
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string block_key(VertexSet s) { return set_to_json(s).dump(); }

VertexSet parse_block_key(const std::string& key) { return set_from_json(parse_json(key)); }

VertexSet set_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected a vertex list, got " + j.dump());
    std::vector<Vertex> vs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("vertex " + v.dump() + " is not an integer");
        vs.push_back(v.get<int>());
    }
    const VertexSet s = VertexSet::from_vector(vs);
    if (static_cast<std::size_t>(s.size()) != vs.size()) throw InputError("repeated vertex in " + j.dump());
    return s;
}

Json set_to_json(VertexSet s) { return Json(s.to_vector()); }

Graph graph_from_json(const Json& j) {
    const int n = size_from_json(j);
    std::vector<Edge> edges;
    const auto& es = j.contains("edges") ? j.at("edges") : Json::array();
    if (!es.is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("edge " + e.dump() + " is not a pair of vertices");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

BuildingSet building_from_json(const Json& j) {
    const int n = size_from_json(j);
    const bool close = j.contains("close") && j.at("close").is_boolean() && j.at("close").get<bool>();
    if (j.contains("generators")) return BuildingSet::closure(n, sets_from_json(j.at("generators")));
    if (j.contains("ground")) return BuildingSet::from_blocks(n, set_from_json(j.at("ground")), sets_from_json(member(j, "blocks")));
    return build_from_blocks(n, sets_from_json(member(j, "blocks")), close);
}

Json to_json(const BuildingSet& b) {
    Json blocks = Json::array();
    for (Block x : b.blocks()) blocks.push_back(set_to_json(x));
    Json out = {{"n", b.n()}, {"blocks", blocks}};
    if (b.ground() != VertexSet::range(b.n())) out["ground"] = set_to_json(b.ground());
    return out;
}

NestedSet nested_from_json(const Json& j, const BuildingSet& b) {
    NestedSet s(sets_from_json(member(j, "blocks")));
    for (Block x : s.blocks) b.require_block(x);
    return s;
}

Json to_json(const NestedSet& s) {
    Json blocks = Json::array();
    for (Block x : s.blocks) blocks.push_back(set_to_json(x));
    return {{"blocks", blocks}};
}

Json to_json(const ConeDescription& c) {
    Json eqs = Json::array();
    for (Block k : c.equalities) eqs.push_back(set_to_json(k));
    Json ineqs = Json::array();
    for (const auto& ineq : c.inequalities) {
        Json coeffs = Json::object();
        for (std::size_t i = 0; i < ineq.coeffs.size(); ++i)
            if (ineq.coeffs[i] != 0) coeffs[block_key(c.building.blocks()[i])] = ineq.coeffs[i];
        ineqs.push_back({{"coeffs", coeffs}, {"text", format_inequality(c.building, ineq)}});
    }
    return {{"equalities", eqs}, {"inequalities", ineqs}};
}

ConeDescription cone_from_json(const Json& j, const BuildingSet& b) {
    std::vector<Inequality> ineqs;
    const auto& list = member(j, "inequalities");
    if (!list.is_array()) throw InputError("\"inequalities\" must be an array");
    for (const auto& e : list) {
        const auto& coeffs = member(e, "coeffs");
        if (!coeffs.is_object()) throw InputError("\"coeffs\" must be an object");
        std::vector<long long> raw(b.size(), 0);
        for (const auto& [key, value] : coeffs.items()) {
            if (!value.is_number_integer()) throw InputError("coefficient of " + key + " is not an integer");
            raw[b.index(parse_block_key(key))] = value.get<long long>();
        }
        ineqs.push_back(canonical_inequality(b, std::move(raw)));
    }
    auto cone = make_cone(b, std::move(ineqs));
    std::vector<Block> eqs = sets_from_json(member(j, "equalities"));
    sort_canonical(eqs);
    cone.equalities = std::move(eqs);
    return cone;
}

std::string cone_to_tsv(const ConeDescription& c) {
    const auto& b = c.building;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b.is_component(b.blocks()[k])) cols.push_back(k);
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "\t" : "") + std::string("h") + b.blocks()[cols[i]].label();
    out += '\n';
    for (const auto& ineq : c.inequalities) {
        for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "\t" : "") + std::to_string(ineq.coeffs[cols[i]]);
        out += '\n';
    }
    return out;
}

HeightVector heights_from_json(const Json& j, const BuildingSet& b) {
    const auto& map = member(j, "heights");
    if (!map.is_object()) throw InputError("\"heights\" must be an object");
    HeightVector h(b.size(), Rational(0));
    std::vector<bool> set(b.size(), false);
    for (const auto& [key, value] : map.items()) {
        const std::size_t i = b.index(parse_block_key(key));
        h[i] = rational_from_json(value);
        set[i] = true;
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!set[i]) throw InputError("no height for block " + block_key(b.blocks()[i]));
    return h;
}

Json heights_to_json(const BuildingSet& b, const HeightVector& h) {
    Json map = Json::object();
    for (std::size_t i = 0; i < b.size(); ++i) map[block_key(b.blocks()[i])] = to_string(h[i]);
    return {{"heights", map}};
}

RowVector p_from_json(const Json& j, std::size_t facets) {
    if (!j.is_object()) throw InputError("p must be an object mapping facet indices to rationals");
    RowVector p(facets, Rational(0));
    std::vector<bool> set(facets, false);
    for (const auto& [key, value] : j.items()) {
        std::size_t idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InputError("facet index \"" + key + "\" is not a number");
        }
        if (idx >= facets) throw InputError("facet index " + key + " out of range");
        p[idx] = rational_from_json(value);
        set[idx] = true;
    }
    for (std::size_t i = 0; i < facets; ++i)
        if (!set[i]) throw InputError("no value of p for facet " + std::to_string(i));
    for (const auto& q : p)
        if (q <= 0) throw InputError("p must be strictly positive");
    return p;
}

Json to_json(const Polytope& p) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Json coords = Json::array();
        for (const auto& q : p.vertices[i]) coords.push_back(to_string(q));
        Json v = {{"coords", coords}};
        if (i < p.labels.size()) v["nested_set"] = to_json(p.labels[i]).at("blocks");
        vertices.push_back(v);
    }
    Json edges = Json::array();
    for (auto [a, b] : p.edges) edges.push_back({a, b});
    return {{"dim", p.dim}, {"axes", p.axes}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace nestocone
