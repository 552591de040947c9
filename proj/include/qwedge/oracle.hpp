#pragma once

#include <vector>

#include "qwedge/measures.hpp"
#include "qwedge/state.hpp"

namespace qwedge {

// Second-path quantities computed from reduced density matrices rather than
// from 2x2 minors; used to cross-validate every measure.
struct PuritySummary {
    // Tr(rho_j^2) per subsystem, rho_j being the mode-j Gram matrix.
    std::vector<double> per_mode_purity;
    // Descending singular values of the mode-1 unfolding; filled for
    // two-subsystem states only.
    std::vector<double> schmidt_values_mode1;
};

PuritySummary purities(const PureState& state);

// Density-matrix route to the same value as measure_auto:
//   m = 2        -> sqrt(N2 * (1 - Tr rho_1^2))
//   otherwise    -> sqrt((2/m) * sum_j (1 - Tr rho_j^2))
// with the normalization constants of MeasureConfig. Shares no minor
// arithmetic with the wedge module.
double oracle_measure(const PureState& state, const MeasureConfig& config = {});

// |<psi| sigma_y (x) sigma_y |psi*>| for dims [2,2], psi* being the
// entrywise conjugate in the computational basis.
double wootters_pure_concurrence(const PureState& state);

}  // namespace qwedge
