#pragma once

#include <json.hpp>
#include <string>

#include "nestocone/building.hpp"
#include "nestocone/graph.hpp"
#include "nestocone/linalg.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/realize.hpp"
#include "nestocone/typecone.hpp"

namespace nestocone {

using Json = nlohmann::json;

/// Parses a file; malformed JSON or unreadable files raise InputError.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// "[1,4]"
std::string block_key(VertexSet s);
VertexSet parse_block_key(const std::string& key);

VertexSet set_from_json(const Json& j);
Json set_to_json(VertexSet s);

/// {"n": 4, "edges": [[1,2],[2,3]]}
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"n": 9, "blocks": [...]} or {"n": 9, "generators": [...], "close": true}
BuildingSet building_from_json(const Json& j);
Json to_json(const BuildingSet& b);

/// {"blocks": [[3],[4],...]}; members must be blocks of b.
NestedSet nested_from_json(const Json& j, const BuildingSet& b);
Json to_json(const NestedSet& s);

/// {"equalities": [...], "inequalities": [{"coeffs": {"[1,4]": 1, ...}, "text": "..."}]}
Json to_json(const ConeDescription& c);
ConeDescription cone_from_json(const Json& j, const BuildingSet& b);
/// Header row of non-component block keys, then one coefficient row per inequality.
std::string cone_to_tsv(const ConeDescription& c);

/// {"heights": {"[1,2]": "-3", ...}}; every block must be present.
HeightVector heights_from_json(const Json& j, const BuildingSet& b);
Json heights_to_json(const BuildingSet& b, const HeightVector& h);

/// {"0": "1", "1": "3/2", ...}: facet index to positive rational.
RowVector p_from_json(const Json& j, std::size_t facets);

/// {"dim": d, "axes": [...], "vertices": [{"coords": [...], "nested_set": [...]}], "edges": [[i,j],...]}
Json to_json(const Polytope& p);

}  // namespace nestocone
