#pragma once

#include <optional>
#include <string>

#include "qwedge/measures.hpp"
#include "qwedge/state.hpp"

namespace qwedge {

// Everything one measurement run produces: the dispatched measure, the
// density-matrix cross-check, and their absolute discrepancy.
struct Report {
    DimList dims;
    double input_norm = 0.0;
    MeasureReport measure;
    std::optional<double> two_qubit_concurrence;  // present for dims [2,2]
    double oracle_value = 0.0;
    double discrepancy = 0.0;  // |measure.value - oracle_value|
};

Report build_report(const PureState& state, const MeasureConfig& config = {});

// Machine-readable form; numbers are printed so they round-trip exactly.
std::string report_to_json(const Report& report);

// Human-readable aligned table.
std::string report_to_table(const Report& report);

}  // namespace qwedge
