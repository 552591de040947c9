#include "qwedge/unfolding.hpp"

#include "qwedge/errors.hpp"

namespace qwedge {

Unfolding::Unfolding(std::size_t mode, Eigen::MatrixXcd entries)
    : mode_(mode), entries_(std::move(entries)) {}

std::vector<Complex> Unfolding::row(std::size_t r) const {
    if (r < 1 || r > rows()) {
        throw ArgumentError("row index out of range (1-based)");
    }
    std::vector<Complex> out(cols());
    for (std::size_t c = 0; c < cols(); ++c) {
        out[c] = entries_(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c));
    }
    return out;
}

Eigen::MatrixXcd Unfolding::gram_matrix() const {
    return entries_ * entries_.adjoint();
}

double Unfolding::frobenius_norm() const {
    return entries_.norm();
}

Unfolding unfold(const PureState& state, std::size_t mode) {
    const DimList& dims = state.dims();
    if (mode < 1 || mode > dims.size()) {
        throw ArgumentError("mode out of range (1-based)");
    }
    const std::size_t n = dims[mode - 1];
    std::size_t stride = 1;  // joint dimension of the subsystems after mode
    for (std::size_t l = mode; l < dims.size(); ++l) {
        stride *= dims[l];
    }
    const std::size_t total = state.size();
    const std::size_t cols = total / n;

    // Column index = (joint index of subsystems before mode) * stride +
    // (joint index of subsystems after mode): the non-mode indices in
    // ascending subsystem order, row-major.
    Eigen::MatrixXcd entries(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols));
    for (std::size_t flat = 0; flat < total; ++flat) {
        const std::size_t r = (flat / stride) % n;
        const std::size_t pre = flat / (stride * n);
        const std::size_t post = flat % stride;
        entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(pre * stride + post)) =
            state[flat];
    }
    return Unfolding(mode, std::move(entries));
}

}  // namespace qwedge
