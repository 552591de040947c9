#pragma once

#include <string>
#include <vector>

#include "qwedge/state.hpp"
#include "qwedge/types.hpp"

namespace qwedge {

// Choice of the normalization constant in front of the wedge sums.
//
//   paper    - bipartite constant 2, which makes the two-qubit value equal
//              the concurrence 2|a11*a22 - a21*a12|.
//   unit_max - bipartite constant d/(d-1) with d = min(N1, N2), which maps
//              the maximally entangled state of any dimension to 1.
//
// The multi-qubit and general multipartite measures use 2/m in both modes:
// at m = 2 that reproduces the bipartite paper value, and it sends GHZ
// states of any width to exactly 1.
enum class Normalization { paper, unit_max };

struct MeasureConfig {
    Normalization normalization = Normalization::paper;
    // Inputs whose norm deviates from 1 by more than this are renormalized
    // on a copy before measuring, and the report flags it.
    double norm_tolerance = 1e-9;
};

enum class MeasurePath { bipartite, multiqubit, multipartite };

const char* to_string(MeasurePath path);

struct MeasureReport {
    double value = 0.0;
    MeasurePath path = MeasurePath::bipartite;
    // Constant actually multiplied into the wedge sum before the root.
    double normalization_constant = 0.0;
    // Per-mode sums over row pairs of the squared wedge norms, before
    // normalization, in ascending mode order. The bipartite path sums only
    // the mode-1 unfolding, so it lists a single entry; the other paths
    // list one entry per subsystem. value^2 equals
    // normalization_constant * sum(mode_contributions).
    std::vector<double> mode_contributions;
    bool renormalized = false;
    MeasureConfig config;
};

// Bipartite measure over the row pairs of the mode-1 unfolding; requires
// exactly 2 subsystems. Equals the generalized concurrence.
MeasureReport bipartite_measure(const PureState& state, const MeasureConfig& config = {});

// 2|a11*a22 - a21*a12| on the (defensively normalized) state; requires
// dims exactly [2,2].
double two_qubit_concurrence(const PureState& state);

// Measure over the single row pair of each of the m two-row unfoldings;
// requires every subsystem dimension to equal 2 and m >= 2.
MeasureReport multiqubit_measure(const PureState& state, const MeasureConfig& config = {});

// General measure: all row pairs of all m unfoldings; requires m >= 2.
// Coincides with multiqubit_measure on qubit states and with the paper-mode
// bipartite measure at m = 2.
MeasureReport multipartite_measure(const PureState& state, const MeasureConfig& config = {});

// Dispatch: m = 2 -> bipartite, all dims 2 -> multiqubit, else multipartite.
MeasureReport measure_auto(const PureState& state, const MeasureConfig& config = {});

}  // namespace qwedge
