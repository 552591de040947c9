#include "qwedge/sampling.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include "qwedge/errors.hpp"

namespace qwedge {

namespace {

Eigen::MatrixXcd gaussian_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            a(r, c) = Complex(re, im);
        }
    }
    return a;
}

}  // namespace

Eigen::MatrixXcd random_unitary(std::size_t n, std::mt19937_64& rng) {
    if (n < 1) {
        throw ArgumentError("unitary dimension must be >= 1");
    }
    const Eigen::MatrixXcd a = gaussian_matrix(n, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of R's diagonal makes the distribution Haar.
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        const Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
    }
    return q;
}

LocalUnitary random_local_unitary(const DimList& dims, std::mt19937_64& rng) {
    if (dims.empty()) {
        throw ArgumentError("dims must not be empty");
    }
    std::uniform_int_distribution<std::size_t> pick(1, dims.size());
    const std::size_t subsystem = pick(rng);
    return LocalUnitary{subsystem, random_unitary(dims[subsystem - 1], rng)};
}

Eigen::MatrixXcd random_filter(std::size_t n, std::mt19937_64& rng, double max_condition) {
    if (n < 1) {
        throw ArgumentError("filter dimension must be >= 1");
    }
    for (;;) {
        const Eigen::MatrixXcd a = gaussian_matrix(n, rng);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        if (smin > 0.0 && smax / smin <= max_condition) {
            return a;
        }
    }
}

PureState random_product_state(const DimList& dims, std::mt19937_64& rng) {
    if (dims.empty()) {
        throw ArgumentError("dims must not be empty");
    }
    PureState state = random_state(DimList{dims[0]}, rng);
    for (std::size_t j = 1; j < dims.size(); ++j) {
        state = tensor_product(state, random_state(DimList{dims[j]}, rng));
    }
    return state;
}

}  // namespace qwedge
