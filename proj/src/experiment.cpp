#include "qwedge/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qwedge/errors.hpp"
#include "qwedge/sampling.hpp"
#include "qwedge/state.hpp"

namespace qwedge {

namespace {

using nlohmann::ordered_json;

// Ratios this close to 1 count as unchanged, so unitary runs are not
// reported as 50% decreases on rounding noise.
constexpr double kDecreaseMargin = 1e-12;

}  // namespace

ExperimentStats run_monotone_experiment(const ExperimentOptions& options) {
    if (options.trials < 1) {
        throw ArgumentError("experiment requires at least 1 trial");
    }
    total_dimension(options.dims);  // validates dims
    if (options.dims.size() < 2) {
        throw ArgumentError("experiment requires at least 2 subsystems");
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(1, options.dims.size());

    ExperimentStats stats;
    stats.trials = options.trials;
    stats.min_ratio = std::numeric_limits<double>::infinity();
    stats.max_ratio = -std::numeric_limits<double>::infinity();
    double ratio_sum = 0.0;
    int measured = 0;

    for (int t = 0; t < options.trials; ++t) {
        const PureState before = random_state(options.dims, rng);
        const std::size_t subsystem = pick(rng);
        const std::size_t n = options.dims[subsystem - 1];
        const Eigen::MatrixXcd op =
            options.unitary_only ? random_unitary(n, rng) : random_filter(n, rng);
        const PureState after = apply_local_filter(before, subsystem, op);

        const double e_before = measure_auto(before, options.config).value;
        if (e_before < 1e-15) {
            ++stats.skipped;
            continue;
        }
        const double ratio = measure_auto(after, options.config).value / e_before;
        ++measured;
        ratio_sum += ratio;
        stats.min_ratio = std::min(stats.min_ratio, ratio);
        stats.max_ratio = std::max(stats.max_ratio, ratio);
        if (ratio < 1.0 - kDecreaseMargin) {
            ++stats.decreased;
        }
    }
    if (measured > 0) {
        stats.mean_ratio = ratio_sum / measured;
    } else {
        stats.min_ratio = 0.0;
        stats.max_ratio = 0.0;
    }
    return stats;
}

std::string experiment_to_json(const ExperimentOptions& options, const ExperimentStats& stats) {
    ordered_json doc;
    doc["dims"] = options.dims;
    doc["seed"] = options.seed;
    doc["trials"] = stats.trials;
    doc["unitary_only"] = options.unitary_only;
    doc["skipped"] = stats.skipped;
    doc["decreased"] = stats.decreased;
    const int measured = stats.trials - stats.skipped;
    doc["fraction_decreased"] =
        measured > 0 ? static_cast<double>(stats.decreased) / measured : 0.0;
    doc["min_ratio"] = stats.min_ratio;
    doc["mean_ratio"] = stats.mean_ratio;
    doc["max_ratio"] = stats.max_ratio;
    return doc.dump();
}

std::string experiment_to_table(const ExperimentOptions& options, const ExperimentStats& stats) {
    std::ostringstream out;
    out << "local filtering experiment: dims [";
    for (std::size_t j = 0; j < options.dims.size(); ++j) {
        out << (j ? "," : "") << options.dims[j];
    }
    out << "] seed=" << options.seed << " trials=" << stats.trials
        << (options.unitary_only ? " (unitaries only)" : "") << "\n";
    const int measured = stats.trials - stats.skipped;
    char line[160];
    std::snprintf(line, sizeof(line),
                  "  measured %d, skipped %d, decreased %d (fraction %.6f)\n", measured,
                  stats.skipped, stats.decreased,
                  measured > 0 ? static_cast<double>(stats.decreased) / measured : 0.0);
    out << line;
    std::snprintf(line, sizeof(line), "  ratio E(after)/E(before): min %.12g  mean %.12g  max %.12g\n",
                  stats.min_ratio, stats.mean_ratio, stats.max_ratio);
    out << line;
    return out.str();
}

}  // namespace qwedge
