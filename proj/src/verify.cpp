#include "nestocone/verify.hpp"

#include <random>

#include "nestocone/errors.hpp"
#include "nestocone/instances.hpp"
#include "nestocone/io.hpp"
#include "nestocone/oracle.hpp"
#include "nestocone/typecone.hpp"

namespace nestocone {

namespace {

std::string describe(const BuildingSet& b) { return to_json(b).dump(); }

void record(VerificationReport& report, const std::string& what, const std::vector<std::string>& failed) {
    ++report.instances;
    if (failed.empty()) return;
    ++report.failures;
    for (const auto& f : failed) report.messages.push_back(what + ": " + f);
}

template <class F>
std::vector<std::string> guarded(F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<std::string> check_building(const BuildingSet& b) {
    std::vector<std::string> failed;
    const auto facets = facet_cone(b);
    if (!cone_equal(facets, irredundant(brute_cone(b)))) failed.push_back("facet description differs from the oracle");
    if (static_cast<long long>(facets.inequalities.size()) != facet_count(b))
        failed.push_back("facet count differs from the closed form");
    const bool count_says = facet_count(b) == ray_count(b) - fan_dimension(b);
    if (is_simplicial(b) != count_says) failed.push_back("simpliciality criterion disagrees with the facet count");
    for (auto variant : {HeightVariant::devadoss, HeightVariant::postnikov})
        if (cone_membership(facets, classic_height(b, variant)) != Membership::interior)
            failed.push_back("classic height is not interior");
    return failed;
}

VerificationReport run_verification(int max_n, std::uint64_t seed, int random_count) {
    if (max_n < 1 || max_n > 6) throw InputError("--max-n must lie between 1 and 6");
    if (random_count < 0) throw InputError("random instance count must be nonnegative");
    VerificationReport report;

    for (int n = 1; n <= max_n; ++n) {
        for (const auto& g : graphs_up_to_isomorphism(n, true)) {
            record(report, "graph " + to_json(g).dump(), guarded([&] {
                       const auto b = graphical_building(g);
                       auto failed = check_building(b);
                       if (!cone_equal(facet_cone(b), graphical_facet_cone(g)))
                           failed.push_back("graphical facet description differs");
                       if (graphical_facet_count(g) != facet_count(b))
                           failed.push_back("graphical facet count differs");
                       if (is_simplicial(b) != is_disjoint_union_of_paths(g))
                           failed.push_back("simpliciality differs from the path criterion");
                       return failed;
                   }));
        }
    }

    std::mt19937_64 rng(seed);
    for (int k = 0; k < random_count; ++k) {
        const auto b = random_building_closure(rng);
        record(report, "closure " + describe(b), guarded([&] { return check_building(b); }));
    }

    for (int k = 0; k < 20; ++k) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const auto b = random_interval_building(rng, n);
        record(report, "interval " + describe(b), guarded([&] {
                   std::vector<std::string> failed;
                   if (!is_simplicial(b)) failed.push_back("interval building set is not simplicial");
                   if (!cone_equal(interval_profile(b).cone, facet_cone(b)))
                       failed.push_back("interval facets differ");
                   return failed;
               }));
    }
    return report;
}

}  // namespace nestocone
