#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwedge/state.hpp"
#include "qwedge/types.hpp"

namespace qwedge {

// Mode-j matricization of a state's amplitude tensor: subsystem j's index
// runs over the rows, the joint index of all other subsystems runs over the
// columns. Columns enumerate the non-mode indices in ascending subsystem
// order, row-major (last of them fastest). Holds a copy, not a view.
class Unfolding {
public:
    Unfolding(std::size_t mode, Eigen::MatrixXcd entries);

    std::size_t mode() const { return mode_; }   // 1-based subsystem index
    std::size_t rows() const { return static_cast<std::size_t>(entries_.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(entries_.cols()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    // 1-based row extraction; row r is the vector of all amplitudes whose
    // mode index equals r.
    std::vector<Complex> row(std::size_t r) const;

    // Gram matrix of the rows: (a,b) = <v_a, v_b>. Hermitian; its trace is
    // the squared state norm. This is the reduced density matrix of the
    // mode subsystem when the state is unit-norm.
    Eigen::MatrixXcd gram_matrix() const;

    double frobenius_norm() const;

private:
    std::size_t mode_;
    Eigen::MatrixXcd entries_;
};

Unfolding unfold(const PureState& state, std::size_t mode);

}  // namespace qwedge
