#include "qwedge/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qwedge/errors.hpp"
#include "qwedge/measures.hpp"
#include "qwedge/oracle.hpp"
#include "qwedge/sampling.hpp"
#include "qwedge/state.hpp"
#include "qwedge/wedge.hpp"

namespace qwedge {

namespace {

using nlohmann::ordered_json;

const std::vector<DimList>& dims_profiles() {
    static const std::vector<DimList> profiles = {
        {2, 2}, {3, 3}, {2, 4}, {2, 2, 2}, {2, 2, 2, 2}, {2, 3, 2}, {3, 3, 3}};
    return profiles;
}

std::vector<Complex> random_vector(std::size_t length, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> v(length);
    for (Complex& x : v) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        x = Complex(re, im);
    }
    return v;
}

struct SuiteRunner {
    SuiteResult result;
    double tolerance;

    void record(double discrepancy) {
        ++result.checks;
        result.worst = std::max(result.worst, discrepancy);
        if (!(discrepancy <= tolerance)) {
            ++result.failures;
        }
    }
};

SuiteResult lagrange_suite(std::mt19937_64& rng, int trials, double tolerance) {
    SuiteRunner run{{"lagrange_identity"}, tolerance};
    for (int t = 0; t < trials; ++t) {
        const std::size_t length = 2 + static_cast<std::size_t>(t) % 15;
        const auto v = random_vector(length, rng);
        const auto w = random_vector(length, rng);
        const auto [wedge_side, gram_side] = lagrange_check(v, w);
        const double scale = std::max({std::abs(wedge_side), std::abs(gram_side), 1.0});
        run.record(std::abs(wedge_side - gram_side) / scale);
    }
    return run.result;
}

SuiteResult oracle_suite(std::mt19937_64& rng, int trials, double tolerance) {
    SuiteRunner run{{"oracle_equivalence"}, tolerance};
    const auto& profiles = dims_profiles();
    for (int t = 0; t < trials; ++t) {
        const DimList& dims = profiles[static_cast<std::size_t>(t) % profiles.size()];
        const PureState s = random_state(dims, rng);
        run.record(std::abs(measure_auto(s).value - oracle_measure(s)));
    }
    return run.result;
}

SuiteResult lu_invariance_suite(std::mt19937_64& rng, int trials, double tolerance) {
    SuiteRunner run{{"local_unitary_invariance"}, tolerance};
    const auto& profiles = dims_profiles();
    for (int t = 0; t < trials; ++t) {
        const DimList& dims = profiles[static_cast<std::size_t>(t) % profiles.size()];
        const PureState s = random_state(dims, rng);
        const LocalUnitary u = random_local_unitary(dims, rng);
        run.record(std::abs(measure_auto(apply_local_unitary(s, u)).value -
                            measure_auto(s).value));
    }
    return run.result;
}

SuiteResult product_vanishing_suite(std::mt19937_64& rng, int trials, double tolerance) {
    SuiteRunner run{{"product_state_vanishing"}, tolerance};
    const auto& profiles = dims_profiles();
    for (int t = 0; t < trials; ++t) {
        const DimList& dims = profiles[static_cast<std::size_t>(t) % profiles.size()];
        const PureState s = random_product_state(dims, rng);
        run.record(measure_auto(s).value);
    }
    return run.result;
}

SuiteResult two_qubit_suite(std::mt19937_64& rng, int trials, double tolerance) {
    SuiteRunner run{{"two_qubit_agreement"}, tolerance};
    for (int t = 0; t < trials; ++t) {
        const PureState s = random_state({2, 2}, rng);
        const double minor_form = two_qubit_concurrence(s);
        const double flip_form = wootters_pure_concurrence(s);
        const double wedge_form = bipartite_measure(s).value;
        run.record(std::max(std::abs(minor_form - flip_form),
                            std::abs(minor_form - wedge_form)));
    }
    return run.result;
}

}  // namespace

bool SelftestSummary::all_passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.failures == 0; });
}

SelftestSummary run_selftest(const SelftestOptions& options) {
    if (options.trials < 1) {
        throw ArgumentError("selftest requires at least 1 trial");
    }
    if (options.tolerance <= 0.0) {
        throw ArgumentError("selftest tolerance must be positive");
    }
    std::mt19937_64 rng(options.seed);
    SelftestSummary summary;
    summary.options = options;
    summary.suites.push_back(lagrange_suite(rng, options.trials, options.tolerance));
    summary.suites.push_back(oracle_suite(rng, options.trials, options.tolerance));
    summary.suites.push_back(lu_invariance_suite(rng, options.trials, options.tolerance));
    summary.suites.push_back(product_vanishing_suite(rng, options.trials, options.tolerance));
    summary.suites.push_back(two_qubit_suite(rng, options.trials, options.tolerance));
    return summary;
}

std::string selftest_to_json(const SelftestSummary& summary) {
    ordered_json doc;
    doc["seed"] = summary.options.seed;
    doc["trials"] = summary.options.trials;
    doc["tolerance"] = summary.options.tolerance;
    auto& suites = doc["suites"] = ordered_json::array();
    for (const SuiteResult& s : summary.suites) {
        suites.push_back({{"name", s.name},
                          {"checks", s.checks},
                          {"failures", s.failures},
                          {"worst", s.worst}});
    }
    doc["all_passed"] = summary.all_passed();
    return doc.dump();
}

std::string selftest_to_table(const SelftestSummary& summary) {
    std::ostringstream out;
    out << "selftest seed=" << summary.options.seed << " trials=" << summary.options.trials;
    char tol[32];
    std::snprintf(tol, sizeof(tol), "%.3g", summary.options.tolerance);
    out << " tolerance=" << tol << "\n";
    for (const SuiteResult& s : summary.suites) {
        char worst[32];
        std::snprintf(worst, sizeof(worst), "%.3e", s.worst);
        out << "  " << s.name;
        for (std::size_t pad = s.name.size(); pad < 26; ++pad) {
            out << ' ';
        }
        out << (s.checks - s.failures) << "/" << s.checks << " passed   worst " << worst
            << "\n";
    }
    out << (summary.all_passed() ? "all suites passed" : "SUITE FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace qwedge
