#pragma once

// Named verification suites. Each returns a list of pass/fail checks; the CLI
// prints them and the acceptance binary turns them into one line per criterion.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pipkit {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;
};

struct SuiteOptions {
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> n;
    std::uint64_t seed = 20261018;
    std::ostream* log = nullptr;  // progress and skip notices
};

// Reduced solutions of (x+y+z)² = bxyz for b = 1..9 against the expected table
// and an independent brute force.
SuiteReport suite_reduced_table();
// Every solution with entries <= bound has b in {1..6, 8, 9}, each witnessed.
SuiteReport suite_b_sweep(std::int64_t bound);
// verify_general_bound for each (n, bound); the maximum b must be n².
SuiteReport suite_general_bound(const std::vector<std::pair<std::size_t, std::int64_t>>& cases);
// T_xyz along the family of every reduced solution, depth <= 4.
SuiteReport suite_xyz_triangles(std::ostream* log, std::size_t depth = 4,
                                std::int64_t max_columns = 1000000);
SuiteReport suite_fibonacci(std::size_t j_max = 5);
SuiteReport suite_denominators(std::int64_t i_max = 6);
SuiteReport suite_counterexamples();
SuiteReport suite_reflexive();
SuiteReport suite_properties(std::size_t instances, std::uint64_t seed);
SuiteReport suite_low_boundary(std::int64_t i_max = 5);

std::vector<std::string> suite_names();
// Maps a suite name or alias to its canonical name.
std::optional<std::string> canonical_suite(std::string_view name);
// Throws OutOfRange for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace pipkit
