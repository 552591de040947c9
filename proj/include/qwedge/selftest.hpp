#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qwedge {

struct SelftestOptions {
    std::uint64_t seed = 42;
    int trials = 200;       // checks per suite
    double tolerance = 1e-10;
};

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    double worst = 0.0;  // largest discrepancy seen
};

struct SelftestSummary {
    SelftestOptions options;
    std::vector<SuiteResult> suites;
    bool all_passed() const;
};

// Runs the randomized invariant suites (Lagrange identity, wedge-vs-purity
// agreement, local-unitary invariance, product-state vanishing, two-qubit
// concurrence agreement) on states drawn from a fixed seed. Deterministic:
// equal options produce identical summaries.
SelftestSummary run_selftest(const SelftestOptions& options);

std::string selftest_to_json(const SelftestSummary& summary);
std::string selftest_to_table(const SelftestSummary& summary);

}  // namespace qwedge
