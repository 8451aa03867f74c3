#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "nestocone/io.hpp"

using namespace nestocone;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("type cone of the path") {
    const auto r = run({"typecone", "--graph", data("path3.json"), "--irredundant"});
    REQUIRE(r.code == 0);
    CHECK(parse_json(r.out).at("inequalities").size() == 3);
    const auto red = run({"typecone", "--graph", data("path3.json"), "--redundant"});
    CHECK(parse_json(red.out).at("inequalities").size() == 5);
    const auto oracle = run({"typecone", "--graph", data("path3.json"), "--oracle"});
    CHECK(parse_json(oracle.out) == parse_json(r.out));
    const auto tsv = run({"typecone", "--graph", data("path3.json"), "--format", "tsv"});
    CHECK(tsv.out == "h1\th2\th3\th12\th23\n0\t-1\t0\t1\t1\n0\t1\t1\t0\t-1\n1\t1\t0\t-1\t0\n");
}

TEST_CASE("counts of the running example") {
    const auto r = run({"count", "--building", data("bcirc.json")});
    REQUIRE(r.code == 0);
    CHECK(parse_json(r.out) == parse_json(R"({"facets": 12, "rays": 19, "dim": 7, "simplicial": true})"));
}

TEST_CASE("enumeration verbs") {
    CHECK(parse_json(run({"nested", "--graph", data("k3.json"), "--count"}).out).at("count") == 6);
    CHECK(parse_json(run({"tubes", "--graph", data("path3.json")}).out).at("tubes").size() == 6);
    const auto b = run({"building", "--building", data("bcirc.json")});
    REQUIRE(b.code == 0);
    CHECK(building_from_json(parse_json(b.out)) == building_from_json(read_json_file(data("bcirc.json"))));
    CHECK(run({"flips", "--graph", data("path3.json")}).code == 0);
    CHECK(parse_json(run({"simplicial", "--graph", data("k3.json")}).out).at("simplicial") == false);
}

TEST_CASE("heights and realizations") {
    const auto h = run({"heights", "--graph", data("path3.json"), "--devadoss"});
    REQUIRE(h.code == 0);
    CHECK(parse_json(h.out).at("heights").at("[1]") == "6");
    CHECK(run({"realize", "--graph", data("k3.json"), "--postnikov"}).code == 0);
    const auto k = run({"kinematic", "--building", data("pitman_stanley3.json")});
    REQUIRE(k.code == 0);
    CHECK(parse_json(k.out).at("vertices").size() == 4);
    CHECK(run({"interval", "--building", data("pitman_stanley3.json")}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "--graph", data("k3.json"), "--building", data("bcirc.json")}).code == 2);
    CHECK(run({"count", "--graph", "/nonexistent.json"}).code == 2);
    CHECK(run({"count", "--graph", data("k3.json"), "--format", "xml"}).code == 2);
    CHECK(run({"interval", "--graph", data("k3.json")}).code == 1);
    CHECK(run({"kinematic", "--graph", data("k3.json")}).code == 1);
    const auto bad = run({"interval", "--graph", data("k3.json")});
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());
}

TEST_CASE("verification suite") {
    const auto r = run({"verify", "--max-n", "3", "--seed", "5"});
    REQUIRE(r.code == 0);
    const auto j = parse_json(r.out);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("instances").get<int>() > 0);
}
