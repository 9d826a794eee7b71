#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tcsurf {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    bool ok = true;
    std::string detail;  // first failure, when any
};

/// Run every randomized property suite with deterministic seeding.  Each
/// suite derives its own stream from the master seed, so results are
/// reproducible for a fixed (seed, iterations) pair.  Suites with a larger
/// stated sample size (group laws, the cocycle identity) run at least that
/// many rounds.
std::vector<SuiteResult> runAllSuites(std::uint64_t seed, int iterations);

} // namespace tcsurf
