#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loclab {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t master_seed = 424242;
    unsigned threads = 0;    // 0 = hardware concurrency
    bool quick = false;      // 1e4 trials per cell instead of 1e5
    double alpha_scale = 1.0; // mutation hook; != 1 must make the suite fail
};

/// Run every acceptance criterion; one result per criterion.
std::vector<CriterionResult> run_acceptance_suite(const ValidationOptions& opts);

} // namespace loclab
