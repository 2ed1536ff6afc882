#pragma once

// Verification suites that cross-check brute force, bijections, series,
// recurrences and the embedded reference data against each other.

#include <string>
#include <string_view>
#include <vector>

namespace invrel {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    int failures() const;
};

struct VerifyOptions {
    /// Largest n for the exhaustive bijection checks.
    int bijection_n_max = 9;
    /// Largest n for brute-force comparisons of counts.
    int count_n_max = 9;
};

/// bijections, series, recurrences, dictionary, dist-symmetry, table1, table2, all.
const std::vector<std::string>& suite_names();

/// DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

} // namespace invrel
