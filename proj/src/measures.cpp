#include "qwedge/measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qwedge/errors.hpp"
#include "qwedge/unfolding.hpp"
#include "qwedge/wedge.hpp"

namespace qwedge {

const char* to_string(MeasurePath path) {
    switch (path) {
        case MeasurePath::bipartite: return "bipartite";
        case MeasurePath::multiqubit: return "multiqubit";
        case MeasurePath::multipartite: return "multipartite";
    }
    return "unknown";
}

namespace {

// Renormalizes a copy when the input norm strays beyond the tolerance.
std::pair<PureState, bool> defensively_normalized(const PureState& state,
                                                  const MeasureConfig& config) {
    const double n = state.norm();
    if (n == 0.0) {
        throw DegenerateStateError("measure of the zero vector is undefined");
    }
    if (std::abs(n - 1.0) > config.norm_tolerance) {
        return {normalize(state), true};
    }
    return {state, false};
}

// Sum over all row pairs nu > mu of the squared wedge norm. Row pairs are
// visited in ascending lexicographic order so the accumulation order, and
// with it the floating-point result, is fixed.
double mode_wedge_sum(const Unfolding& u) {
    const std::size_t rows = u.rows();
    std::vector<std::vector<Complex>> row_vectors;
    row_vectors.reserve(rows);
    for (std::size_t r = 1; r <= rows; ++r) {
        row_vectors.push_back(u.row(r));
    }
    double sum = 0.0;
    for (std::size_t mu = 0; mu < rows; ++mu) {
        for (std::size_t nu = mu + 1; nu < rows; ++nu) {
            sum += wedge_norm_sq(wedge(row_vectors[mu], row_vectors[nu]));
        }
    }
    return sum;
}

double bipartite_constant(const MeasureConfig& config, const DimList& dims) {
    if (config.normalization == Normalization::paper) {
        return 2.0;
    }
    const std::size_t d = std::min(dims[0], dims[1]);
    // A trivial subsystem carries no entanglement; the wedge sum is zero and
    // any finite constant gives the same measure.
    return d > 1 ? static_cast<double>(d) / static_cast<double>(d - 1) : 1.0;
}

MeasureReport assemble(MeasurePath path, double constant, std::vector<double> contributions,
                       bool renormalized, const MeasureConfig& config) {
    double sum = 0.0;
    for (double c : contributions) {
        sum += c;
    }
    MeasureReport report;
    report.value = std::sqrt(constant * sum);
    report.path = path;
    report.normalization_constant = constant;
    report.mode_contributions = std::move(contributions);
    report.renormalized = renormalized;
    report.config = config;
    return report;
}

}  // namespace

MeasureReport bipartite_measure(const PureState& state, const MeasureConfig& config) {
    if (state.subsystem_count() != 2) {
        throw ArgumentError("bipartite_measure requires exactly 2 subsystems");
    }
    auto [ns, renormalized] = defensively_normalized(state, config);
    const double contribution = mode_wedge_sum(unfold(ns, 1));
    return assemble(MeasurePath::bipartite, bipartite_constant(config, ns.dims()),
                    {contribution}, renormalized, config);
}

double two_qubit_concurrence(const PureState& state) {
    if (state.dims() != DimList{2, 2}) {
        throw ArgumentError("two_qubit_concurrence requires dims [2,2]");
    }
    auto [ns, renormalized] = defensively_normalized(state, MeasureConfig{});
    (void)renormalized;
    const auto& a = ns.amplitudes();
    // Flat layout: a[0]=a11, a[1]=a12, a[2]=a21, a[3]=a22.
    return 2.0 * std::abs(a[0] * a[3] - a[2] * a[1]);
}

MeasureReport multiqubit_measure(const PureState& state, const MeasureConfig& config) {
    const std::size_t m = state.subsystem_count();
    if (m < 2) {
        throw ArgumentError("multiqubit_measure requires at least 2 subsystems");
    }
    for (std::size_t n : state.dims()) {
        if (n != 2) {
            throw ArgumentError("multiqubit_measure requires every dimension to equal 2");
        }
    }
    auto [ns, renormalized] = defensively_normalized(state, config);
    std::vector<double> contributions(m);
    for (std::size_t j = 1; j <= m; ++j) {
        contributions[j - 1] = mode_wedge_sum(unfold(ns, j));  // single row pair (1,2)
    }
    return assemble(MeasurePath::multiqubit, 2.0 / static_cast<double>(m),
                    std::move(contributions), renormalized, config);
}

MeasureReport multipartite_measure(const PureState& state, const MeasureConfig& config) {
    const std::size_t m = state.subsystem_count();
    if (m < 2) {
        throw ArgumentError("multipartite_measure requires at least 2 subsystems");
    }
    auto [ns, renormalized] = defensively_normalized(state, config);
    std::vector<double> contributions(m);
    for (std::size_t j = 1; j <= m; ++j) {
        contributions[j - 1] = mode_wedge_sum(unfold(ns, j));
    }
    return assemble(MeasurePath::multipartite, 2.0 / static_cast<double>(m),
                    std::move(contributions), renormalized, config);
}

MeasureReport measure_auto(const PureState& state, const MeasureConfig& config) {
    const std::size_t m = state.subsystem_count();
    if (m < 2) {
        throw ArgumentError("measures require at least 2 subsystems");
    }
    if (m == 2) {
        return bipartite_measure(state, config);
    }
    const bool all_qubits =
        std::all_of(state.dims().begin(), state.dims().end(), [](std::size_t n) { return n == 2; });
    return all_qubits ? multiqubit_measure(state, config) : multipartite_measure(state, config);
}

}  // namespace qwedge
