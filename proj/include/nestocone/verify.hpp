#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestocone/building.hpp"

namespace nestocone {

struct VerificationReport {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;
};

/// Every check for one building set: oracle equality of facet descriptions,
/// closed-form counts, the simpliciality criterion, and interior classic
/// heights. Returns the failed checks.
std::vector<std::string> check_building(const BuildingSet& b);

/// Runs check_building over all connected graphs on at most max_n vertices
/// (up to isomorphism), `random_count` seeded random closures, and random
/// interval building sets, plus graph-specific cross-checks.
VerificationReport run_verification(int max_n, std::uint64_t seed, int random_count = 50);

}  // namespace nestocone
