#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace milnor_hodge {

/// Outcome of one bundled suite. `passed` counts individual checks.
struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;
    /// Known, documented deviations that are reported but do not fail the suite.
    std::vector<std::string> annotations;

    bool ok() const { return passed == total && failures.empty(); }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
    std::string to_text() const;
};

/// Runs the golden-value and randomized property suites. Deterministic for a
/// given seed.
VerifyReport run_verification(std::uint64_t seed = 20240611);

}  // namespace milnor_hodge
