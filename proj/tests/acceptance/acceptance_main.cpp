// One line per acceptance criterion: "criterion N: PASS|FAIL (ms) summary".
// Failing checks are listed underneath. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pipkit/suites.hpp"

using namespace pipkit;

namespace {

struct Criterion {
    int number;
    std::string summary;
    double limit_ms;  // 0 means no time limit
    std::function<SuiteReport()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "reduced solutions table for b = 1..9 matches brute force", 1000, [] { return suite_reduced_table(); }},
        {2, "b-sweep over 1 <= x <= y <= z <= 300", 60000, [] { return suite_b_sweep(300); }},
        {3, "general bound: max b = n^2 for (2,50), (3,200), (4,40)", 120000,
         [] { return suite_general_bound({{2, 50}, {3, 200}, {4, 40}}); }},
        {4, "T_xyz certifies (1, b) along every family to depth 4", 600000,
         [] { return suite_xyz_triangles(&std::cerr, 4); }},
        {5, "Fibonacci triangles j = 1..5 and denominator growth", 0, [] { return suite_fibonacci(5); }},
        {6, "denominator 3/4/10 constructions for i = 1..6, all in-range b", 300000,
         [] { return suite_denominators(6); }},
        {7, "4-gon and 8-gon counterexamples", 0, [] { return suite_counterexamples(); }},
        {8, "16 reflexive polygons", 0, [] { return suite_reflexive(); }},
        {9, "property suites on 100 random instances each", 0, [] { return suite_properties(100, 20261018); }},
        {10, "PIPs with one or two boundary points, i = 1..5", 0, [] { return suite_low_boundary(5); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        SuiteReport report;
        std::string crash;
        try {
            report = c.run();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
        const bool ok = crash.empty() && report.passed() && in_time;
        if (!ok) ++failures;

        std::size_t passed = 0;
        for (const auto& ch : report.checks) passed += ch.passed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.0f ms", ms);
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " (" << timing;
        if (c.limit_ms > 0) std::cout << ", limit " << static_cast<long>(c.limit_ms / 1000) << " s";
        std::cout << ") " << c.summary << " [" << passed << "/" << report.checks.size() << " checks]\n";
        if (!crash.empty()) std::cout << "    error: " << crash << "\n";
        if (!in_time) std::cout << "    over time limit\n";
        for (const auto& ch : report.checks) {
            if (!ch.passed) std::cout << "    FAIL " << ch.name << ": " << ch.detail << "\n";
        }
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
