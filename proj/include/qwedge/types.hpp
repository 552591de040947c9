#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qwedge {

using Complex = std::complex<double>;
using DimList = std::vector<std::size_t>;

// Product of the subsystem dimensions. Throws ArgumentError on empty dims,
// a zero entry, or a product too large to represent as a state vector.
std::size_t total_dimension(const DimList& dims);

// Multi-index <-> flat offset conversion. Multi-indices are 1-based per
// component; flat offsets are 0-based and row-major (the last subsystem
// index varies fastest).
std::size_t flat_index(const DimList& dims, const std::vector<std::size_t>& multi);
std::vector<std::size_t> multi_index(const DimList& dims, std::size_t flat);

}  // namespace qwedge
