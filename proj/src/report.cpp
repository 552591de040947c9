#include "qwedge/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "qwedge/oracle.hpp"

namespace qwedge {

namespace {

using nlohmann::ordered_json;

std::string fmt_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

const char* norm_mode_name(Normalization mode) {
    return mode == Normalization::paper ? "paper" : "unit_max";
}

}  // namespace

Report build_report(const PureState& state, const MeasureConfig& config) {
    Report report;
    report.dims = state.dims();
    report.input_norm = state.norm();
    report.measure = measure_auto(state, config);
    if (state.dims() == DimList{2, 2}) {
        report.two_qubit_concurrence = two_qubit_concurrence(state);
    }
    report.oracle_value = oracle_measure(state, config);
    report.discrepancy = std::abs(report.measure.value - report.oracle_value);
    return report;
}

std::string report_to_json(const Report& report) {
    ordered_json doc;
    doc["input"] = {{"dims", report.dims},
                    {"norm", report.input_norm},
                    {"renormalized", report.measure.renormalized}};
    doc["config"] = {{"normalization", norm_mode_name(report.measure.config.normalization)},
                     {"norm_tolerance", report.measure.config.norm_tolerance}};
    ordered_json measures;
    measures[to_string(report.measure.path)] = report.measure.value;
    if (report.two_qubit_concurrence) {
        measures["two_qubit_concurrence"] = *report.two_qubit_concurrence;
    }
    doc["measures"] = measures;
    doc["path"] = to_string(report.measure.path);
    doc["normalization_constant"] = report.measure.normalization_constant;
    doc["mode_contributions"] = report.measure.mode_contributions;
    doc["oracle"] = {{"value", report.oracle_value}, {"discrepancy", report.discrepancy}};
    return doc.dump();
}

std::string report_to_table(const Report& report) {
    std::ostringstream out;
    out << "dims                 [";
    for (std::size_t j = 0; j < report.dims.size(); ++j) {
        out << (j ? ", " : "") << report.dims[j];
    }
    out << "]\n";
    out << "input norm           " << fmt_double(report.input_norm) << "\n";
    out << "renormalized         " << (report.measure.renormalized ? "yes" : "no") << "\n";
    out << "path                 " << to_string(report.measure.path) << "\n";
    out << "normalization        " << norm_mode_name(report.measure.config.normalization)
        << " (constant " << fmt_double(report.measure.normalization_constant) << ")\n";
    out << "measure              " << fmt_double(report.measure.value) << "\n";
    out << "mode contributions  ";
    for (double c : report.measure.mode_contributions) {
        out << " " << fmt_double(c);
    }
    out << "\n";
    if (report.two_qubit_concurrence) {
        out << "two-qubit concurrence " << fmt_double(*report.two_qubit_concurrence) << "\n";
    }
    out << "oracle               " << fmt_double(report.oracle_value) << "\n";
    out << "discrepancy          " << fmt_double(report.discrepancy) << "\n";
    return out.str();
}

}  // namespace qwedge
