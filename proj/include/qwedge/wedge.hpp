#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qwedge/types.hpp"

namespace qwedge {

// Independent components of the antisymmetric tensor v (x) w - w (x) v for
// two length-D vectors: the D*(D-1)/2 values v[a]*w[b] - w[a]*v[b] over
// column pairs a < b, stored in ascending lexicographic (a,b) order. The
// full tensor carries each value twice with opposite signs; wedge_norm_sq
// restores that factor of 2.
class MinorTable {
public:
    MinorTable(std::size_t length, std::vector<Complex> minors);

    std::size_t length() const { return length_; }          // D
    std::size_t count() const { return minors_.size(); }    // D*(D-1)/2

    // 1-based column pair, a < b.
    Complex minor_at(std::size_t a, std::size_t b) const;

    // Ascending lexicographic (a,b) order.
    const std::vector<Complex>& values() const { return minors_; }

private:
    std::size_t length_;
    std::vector<Complex> minors_;
};

// Pairwise wedge product of two equal-length vectors. Each minor is
// evaluated literally as v[a]*w[b] - w[a]*v[b], so wedge(v, v) is exactly
// zero in floating point (both products are the same operation on the same
// operands) and wedge(w, v) is the exact negation of wedge(v, w).
MinorTable wedge(std::span<const Complex> v, std::span<const Complex> w);

// Squared Euclidean norm of the full antisymmetric tensor:
// 2 * sum_{a<b} |minor(a,b)|^2. Summation runs in ascending (a,b) order.
double wedge_norm_sq(const MinorTable& table);

// Both sides of the Lagrange identity, for cross-checking:
//   first  = wedge_norm_sq(wedge(v, w))
//   second = 2 * (|v|^2 |w|^2 - |<v,w>|^2)
// The two agree up to rounding for all inputs.
std::pair<double, double> lagrange_check(std::span<const Complex> v,
                                         std::span<const Complex> w);

}  // namespace qwedge
