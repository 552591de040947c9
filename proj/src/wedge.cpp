#include "qwedge/wedge.hpp"

#include <cmath>

#include "qwedge/errors.hpp"

namespace qwedge {

MinorTable::MinorTable(std::size_t length, std::vector<Complex> minors)
    : length_(length), minors_(std::move(minors)) {}

Complex MinorTable::minor_at(std::size_t a, std::size_t b) const {
    if (a < 1 || b <= a || b > length_) {
        throw ArgumentError("minor indices must satisfy 1 <= a < b <= length");
    }
    // Offset of (a,b) in the ascending lexicographic enumeration, 0-based.
    const std::size_t i = a - 1;
    const std::size_t j = b - 1;
    return minors_[i * length_ - i * (i + 1) / 2 + (j - i - 1)];
}

MinorTable wedge(std::span<const Complex> v, std::span<const Complex> w) {
    if (v.size() != w.size()) {
        throw ArgumentError("wedge requires equal-length vectors");
    }
    const std::size_t d = v.size();
    std::vector<Complex> minors;
    minors.reserve(d * (d - 1) / 2);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            minors.push_back(v[a] * w[b] - w[a] * v[b]);
        }
    }
    return MinorTable(d, std::move(minors));
}

double wedge_norm_sq(const MinorTable& table) {
    double sum = 0.0;
    for (const Complex& m : table.values()) {
        sum += std::norm(m);
    }
    return 2.0 * sum;
}

std::pair<double, double> lagrange_check(std::span<const Complex> v,
                                         std::span<const Complex> w) {
    if (v.size() != w.size()) {
        throw ArgumentError("lagrange_check requires equal-length vectors");
    }
    double vv = 0.0;
    double ww = 0.0;
    Complex vw = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        vv += std::norm(v[i]);
        ww += std::norm(w[i]);
        vw += std::conj(v[i]) * w[i];
    }
    const double gram_side = 2.0 * (vv * ww - std::norm(vw));
    return {wedge_norm_sq(wedge(v, w)), gram_side};
}

}  // namespace qwedge
