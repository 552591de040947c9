#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwedge/types.hpp"

namespace qwedge {

// Pure state of m subsystems with dimensions (N_1, ..., N_m), stored as a
// flat row-major amplitude vector of length N_1*...*N_m. States are
// immutable values; every operation below returns a new state.
class PureState {
public:
    // Validates that dims is nonempty, every entry is >= 1, and the
    // amplitude count equals the product of dims. Amplitudes are stored
    // verbatim; no normalization is applied.
    PureState(DimList dims, std::vector<Complex> amplitudes);

    const DimList& dims() const { return dims_; }
    std::size_t subsystem_count() const { return dims_.size(); }
    std::size_t size() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t flat) const { return amplitudes_[flat]; }

    // 1-based multi-index access, e.g. amplitude({2,1,1}).
    Complex amplitude(const std::vector<std::size_t>& multi) const;

    // Euclidean norm sqrt(sum |amp|^2).
    double norm() const;

private:
    DimList dims_;
    std::vector<Complex> amplitudes_;
};

PureState make_state(DimList dims, std::vector<Complex> amplitudes);

// Unit-norm copy of the input. Throws DegenerateStateError on the zero vector.
PureState normalize(const PureState& state);

// Canonical reference states, all unit-norm.
PureState bell_state();
PureState ghz_state(std::size_t subsystems);
PureState w_state(std::size_t subsystems);
PureState product_basis_state(const DimList& dims);   // |1,1,...,1>
PureState max_entangled_state(std::size_t levels);    // (sum_i |i,i>)/sqrt(d)

// Parses "bell", "ghz:M", "w:M", "maxent:D" or "product:N1xN2x...".
PureState named_state(std::string_view name);

// Uniform on the unit sphere of the joint space: i.i.d. standard complex
// Gaussian amplitudes, then normalized. Deterministic for a given seed.
PureState random_state(const DimList& dims, std::uint64_t seed);
PureState random_state(const DimList& dims, std::mt19937_64& rng);

struct LocalUnitary {
    std::size_t subsystem = 1;  // 1-based
    Eigen::MatrixXcd matrix;
};

// Contracts u.matrix against the chosen subsystem index. The matrix must be
// unitary within 1e-10 entrywise and match that subsystem's dimension.
PureState apply_local_unitary(const PureState& state, const LocalUnitary& u);

// Single-subsystem invertible map followed by renormalization.
PureState apply_local_filter(const PureState& state, std::size_t subsystem,
                             const Eigen::MatrixXcd& op);

// Kronecker product of two states: dims concatenate, amplitudes multiply.
PureState tensor_product(const PureState& a, const PureState& b);

}  // namespace qwedge
