#pragma once

#include <random>

#include <Eigen/Dense>

#include "qwedge/state.hpp"
#include "qwedge/types.hpp"

namespace qwedge {

// Haar-distributed n x n unitary (QR of a complex Gaussian matrix with
// phase-fixed diagonal).
Eigen::MatrixXcd random_unitary(std::size_t n, std::mt19937_64& rng);

// Random unitary on a uniformly chosen subsystem.
LocalUnitary random_local_unitary(const DimList& dims, std::mt19937_64& rng);

// Invertible complex Gaussian matrix, resampled until its condition number
// is at most max_condition.
Eigen::MatrixXcd random_filter(std::size_t n, std::mt19937_64& rng,
                               double max_condition = 1e3);

// Tensor product of independent single-subsystem random states; carries no
// entanglement by construction.
PureState random_product_state(const DimList& dims, std::mt19937_64& rng);

}  // namespace qwedge
