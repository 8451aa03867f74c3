#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <ostream>

#include "nestocone/building.hpp"
#include "nestocone/errors.hpp"
#include "nestocone/io.hpp"
#include "nestocone/nested.hpp"
#include "nestocone/oracle.hpp"
#include "nestocone/realize.hpp"
#include "nestocone/typecone.hpp"
#include "nestocone/verify.hpp"

namespace nestocone::cli {

namespace {

struct Options {
    std::string graph;
    std::string building;
    std::string format = "json";
    std::string heights;
    std::string p;
    std::string nested;
    std::string check;
    bool redundant = false;
    bool irredundant = false;
    bool oracle = false;
    bool devadoss = false;
    bool postnikov = false;
    bool count_only = false;
    std::uint64_t seed = 1;
    int max_n = 5;
};

void add_input(CLI::App* cmd, Options& o) {
    auto* g = cmd->add_option("--graph", o.graph, "Graph JSON file");
    auto* b = cmd->add_option("--building", o.building, "Building-set JSON file");
    g->excludes(b);
    b->excludes(g);
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
}

struct Input {
    std::optional<Graph> graph;
    BuildingSet building;
};

Input load_input(const Options& o) {
    if (o.graph.empty() == o.building.empty()) throw InputError("exactly one of --graph or --building is required");
    if (!o.graph.empty()) {
        Graph g = graph_from_json(read_json_file(o.graph));
        auto b = graphical_building(g);
        return {std::move(g), std::move(b)};
    }
    return {std::nullopt, building_from_json(read_json_file(o.building))};
}

Json sets_json(const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(set_to_json(s));
    return out;
}

Json frame_json(const ExchangeFrame& f) {
    return {{"out", set_to_json(f.b_out)},
            {"in", set_to_json(f.b_in)},
            {"parent", set_to_json(f.parent)},
            {"pivots", {f.pivot_out, f.pivot_in}}};
}

void emit_cone(const ConeDescription& c, const Options& o, std::ostream& out) {
    if (o.format == "tsv")
        out << cone_to_tsv(c);
    else
        out << to_json(c).dump(2) << '\n';
}

void emit_sets(const std::vector<VertexSet>& sets, const char* key, const Options& o, std::ostream& out) {
    if (o.format == "tsv") {
        for (VertexSet s : sets) out << s.label() << '\n';
        return;
    }
    out << Json{{key, sets_json(sets)}}.dump(2) << '\n';
}

HeightVector chosen_height(const BuildingSet& b, const Options& o) {
    if (!o.heights.empty()) return heights_from_json(read_json_file(o.heights), b);
    return classic_height(b, o.postnikov ? HeightVariant::postnikov : HeightVariant::devadoss);
}

int run(const std::string& verb, const Options& o, std::ostream& out) {
    if (verb == "verify") {
        const auto report = run_verification(o.max_n, o.seed);
        Json j = {{"instances", report.instances}, {"failures", report.failures}};
        if (!report.messages.empty()) j["messages"] = report.messages;
        out << j.dump() << '\n';
        return report.failures == 0 ? 0 : 1;
    }
    const Input in = load_input(o);
    const BuildingSet& b = in.building;

    if (verb == "tubes") {
        if (!in.graph) throw InputError("tubes requires --graph");
        emit_sets(enumerate_tubes(*in.graph), "tubes", o, out);
    } else if (verb == "building") {
        if (o.format == "tsv") {
            for (Block x : b.blocks()) out << x.label() << '\n';
            return 0;
        }
        Json j = to_json(b);
        j["components"] = sets_json(b.components());
        j["elementary"] = sets_json(elementary_blocks(b));
        j["graphical"] = is_graphical(b);
        out << j.dump(2) << '\n';
    } else if (verb == "nested") {
        const auto sets = enumerate_maximal_nested_sets(b);
        if (o.count_only) {
            out << Json{{"count", sets.size()}}.dump() << '\n';
            return 0;
        }
        if (o.format == "tsv") {
            for (const auto& s : sets) {
                for (std::size_t i = 0; i < s.blocks.size(); ++i) out << (i ? "\t" : "") << s.blocks[i].label();
                out << '\n';
            }
            return 0;
        }
        Json list = Json::array();
        for (const auto& s : sets) list.push_back(to_json(s).at("blocks"));
        out << Json{{"count", sets.size()}, {"nested_sets", list}}.dump(2) << '\n';
    } else if (verb == "flips") {
        std::vector<NestedSet> sources;
        if (!o.nested.empty())
            sources.push_back(nested_from_json(read_json_file(o.nested), b));
        else
            sources = enumerate_maximal_nested_sets(b);
        Json list = Json::array();
        for (const auto& s : sources) {
            for (const auto& f : flips(b, s)) {
                Json j = frame_json(f.frame);
                j["from"] = to_json(s).at("blocks");
                j["to"] = to_json(f.result).at("blocks");
                j["inequality"] = format_inequality(b, wall_inequality(b, f.frame));
                list.push_back(j);
            }
        }
        if (o.format == "tsv") {
            for (const auto& j : list)
                out << set_from_json(j["out"]).label() << '\t' << set_from_json(j["in"]).label() << '\t'
                    << set_from_json(j["parent"]).label() << '\t' << j["pivots"][0] << '\t' << j["pivots"][1] << '\t'
                    << j["inequality"].get<std::string>() << '\n';
            return 0;
        }
        out << Json{{"flips", list}}.dump(2) << '\n';
    } else if (verb == "typecone") {
        if (int(o.redundant) + int(o.irredundant) + int(o.oracle) > 1)
            throw InputError("choose at most one of --redundant, --irredundant, --oracle");
        if (o.redundant)
            emit_cone(redundant_cone(b), o, out);
        else if (o.oracle)
            emit_cone(irredundant(brute_cone(b)), o, out);
        else
            emit_cone(facet_cone(b), o, out);
    } else if (verb == "count") {
        out << Json{{"facets", facet_count(b)},
                    {"rays", ray_count(b)},
                    {"dim", fan_dimension(b)},
                    {"simplicial", is_simplicial(b)}}
                   .dump()
            << '\n';
    } else if (verb == "simplicial") {
        out << Json{{"simplicial", is_simplicial(b)},
                    {"facets", facet_count(b)},
                    {"rays_minus_dim", ray_count(b) - fan_dimension(b)}}
                   .dump()
            << '\n';
    } else if (verb == "heights") {
        if (!o.check.empty()) {
            const auto h = heights_from_json(read_json_file(o.check), b);
            out << Json{{"membership", to_string(height_membership(b, h))}}.dump() << '\n';
            return 0;
        }
        if (o.devadoss && o.postnikov) throw InputError("choose one of --devadoss or --postnikov");
        const auto variant = o.postnikov ? HeightVariant::postnikov : HeightVariant::devadoss;
        out << heights_to_json(b, classic_height(b, variant)).dump(2) << '\n';
    } else if (verb == "realize") {
        out << to_json(realize_polytope(b, chosen_height(b, o))).dump(2) << '\n';
    } else if (verb == "kinematic") {
        const auto facets = facet_cone(b).inequalities.size();
        RowVector p(facets, Rational(1));
        if (!o.p.empty()) p = p_from_json(read_json_file(o.p), facets);
        out << to_json(kinematic_polytope(b, p)).dump(2) << '\n';
    } else if (verb == "interval") {
        const auto profile = interval_profile(b);
        if (o.format == "tsv") {
            out << cone_to_tsv(profile.cone);
            return 0;
        }
        Json rows = Json::array();
        for (const auto& r : profile.rows)
            rows.push_back({{"block", set_to_json(r.block)},
                            {"i", r.i},
                            {"j", r.j},
                            {"l", r.left},
                            {"r", r.right},
                            {"elementary", r.elementary},
                            {"sequence", r.sequence},
                            {"inequality", format_inequality(b, r.inequality)}});
        out << Json{{"rows", rows}, {"cone", to_json(profile.cone)}}.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nested complexes, nested fans and type cones of nestohedra", "nestocone"};
    app.require_subcommand(1);
    Options o;

    struct Verb {
        const char* name;
        const char* help;
        std::function<void(CLI::App*)> extra;
    };
    const std::vector<Verb> verbs = {
        {"tubes", "List the tubes of a graph", [&](CLI::App* c) { add_format(c, o); }},
        {"building", "Validate or close a building set", [&](CLI::App* c) { add_format(c, o); }},
        {"nested", "Enumerate maximal nested sets",
         [&](CLI::App* c) {
             add_format(c, o);
             c->add_flag("--count", o.count_only, "Only print the number of maximal nested sets");
         }},
        {"flips", "List flips with their exchange frames",
         [&](CLI::App* c) {
             add_format(c, o);
             c->add_option("--nested", o.nested, "Maximal nested-set JSON file (default: all)");
         }},
        {"typecone", "Type cone description",
         [&](CLI::App* c) {
             add_format(c, o);
             c->add_flag("--redundant", o.redundant, "All wall-crossing inequalities");
             c->add_flag("--irredundant", o.irredundant, "Facet description (default)");
             c->add_flag("--oracle", o.oracle, "Facets by brute force and linear programming");
         }},
        {"count", "Facet, ray and dimension counts", nullptr},
        {"simplicial", "Whether the type cone is simplicial", nullptr},
        {"heights", "Classic heights or a membership check",
         [&](CLI::App* c) {
             c->add_flag("--devadoss", o.devadoss, "h_B = -3^|B| (default)");
             c->add_flag("--postnikov", o.postnikov, "h_B = -#{blocks inside B}");
             c->add_option("--check", o.check, "Heights JSON file to classify");
         }},
        {"realize", "Polytope from a height vector",
         [&](CLI::App* c) {
             c->add_option("--heights", o.heights, "Heights JSON file (default: Devadoss heights)");
             c->add_flag("--postnikov", o.postnikov, "Use Postnikov heights");
         }},
        {"kinematic", "Kinematic realization of a simplicial type cone",
         [&](CLI::App* c) { c->add_option("--p", o.p, "JSON map from facet index to positive rational"); }},
        {"interval", "Interval building-set profile", [&](CLI::App* c) { add_format(c, o); }},
    };
    for (const auto& v : verbs) {
        auto* c = app.add_subcommand(v.name, v.help);
        add_input(c, o);
        if (v.extra) v.extra(c);
    }
    auto* verify = app.add_subcommand("verify", "Run the oracle verification suite");
    verify->add_option("--max-n", o.max_n, "Largest graph size");
    verify->add_option("--seed", o.seed, "Seed for random building sets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run(verb, o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace nestocone::cli
