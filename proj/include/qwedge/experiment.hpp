#pragma once

#include <cstdint>
#include <string>

#include "qwedge/measures.hpp"
#include "qwedge/types.hpp"

namespace qwedge {

// Statistical probe of measure behavior under random local filtering.
// Reports the distribution of E(after)/E(before); asserts nothing.
struct ExperimentOptions {
    DimList dims = {2, 2, 2};
    std::uint64_t seed = 42;
    int trials = 100;
    bool unitary_only = false;  // sample unitaries instead of filters
    MeasureConfig config;
};

struct ExperimentStats {
    int trials = 0;
    int skipped = 0;    // trials whose initial measure was numerically zero
    int decreased = 0;  // ratio < 1 - 1e-12
    double min_ratio = 0.0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
};

ExperimentStats run_monotone_experiment(const ExperimentOptions& options);

std::string experiment_to_json(const ExperimentOptions& options, const ExperimentStats& stats);
std::string experiment_to_table(const ExperimentOptions& options, const ExperimentStats& stats);

}  // namespace qwedge
