#include "qwedge/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "qwedge/errors.hpp"
#include "qwedge/unfolding.hpp"

namespace qwedge {

namespace {

PureState unit_norm_copy(const PureState& state, double tolerance) {
    const double n = state.norm();
    if (n == 0.0) {
        throw DegenerateStateError("the zero vector has no reduced density matrices");
    }
    return std::abs(n - 1.0) > tolerance ? normalize(state) : state;
}

}  // namespace

PuritySummary purities(const PureState& state) {
    const PureState ns = unit_norm_copy(state, 1e-9);
    const std::size_t m = ns.subsystem_count();
    PuritySummary summary;
    summary.per_mode_purity.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) {
        // Tr(rho^2) = squared Frobenius norm for Hermitian rho.
        summary.per_mode_purity.push_back(unfold(ns, j).gram_matrix().squaredNorm());
    }
    if (m == 2) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(unfold(ns, 1).entries());
        const auto& sv = svd.singularValues();
        summary.schmidt_values_mode1.assign(sv.data(), sv.data() + sv.size());
    }
    return summary;
}

double oracle_measure(const PureState& state, const MeasureConfig& config) {
    const std::size_t m = state.subsystem_count();
    if (m < 2) {
        throw ArgumentError("measures require at least 2 subsystems");
    }
    const PureState ns = unit_norm_copy(state, config.norm_tolerance);
    const PuritySummary summary = purities(ns);

    double constant;
    double sum;
    if (m == 2) {
        if (config.normalization == Normalization::paper) {
            constant = 2.0;
        } else {
            const std::size_t d = std::min(ns.dims()[0], ns.dims()[1]);
            constant = d > 1 ? static_cast<double>(d) / static_cast<double>(d - 1) : 1.0;
        }
        sum = 1.0 - summary.per_mode_purity[0];
    } else {
        constant = 2.0 / static_cast<double>(m);
        sum = 0.0;
        for (double purity : summary.per_mode_purity) {
            sum += 1.0 - purity;
        }
    }
    // Rounding can push a product-state purity a hair above 1.
    return std::sqrt(constant * std::max(sum, 0.0));
}

double wootters_pure_concurrence(const PureState& state) {
    if (state.dims() != DimList{2, 2}) {
        throw ArgumentError("wootters_pure_concurrence requires dims [2,2]");
    }
    const PureState ns = unit_norm_copy(state, 1e-9);

    Eigen::Matrix2cd sigma_y;
    sigma_y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            flip.block<2, 2>(2 * i, 2 * j) = sigma_y(i, j) * sigma_y;
        }
    }

    Eigen::Vector4cd psi;
    for (int i = 0; i < 4; ++i) {
        psi(i) = ns[static_cast<std::size_t>(i)];
    }
    // <psi| (sigma_y x sigma_y) |psi*>
    return std::abs(psi.dot(flip * psi.conjugate()));
}

}  // namespace qwedge
