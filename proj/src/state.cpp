#include "qwedge/state.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qwedge/errors.hpp"

namespace qwedge {

namespace {

// Desk-scale tool: refuse amplitude vectors beyond 2^30 entries.
constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 30;

void check_dims(const DimList& dims) {
    if (dims.empty()) {
        throw ArgumentError("dims must not be empty");
    }
    for (std::size_t n : dims) {
        if (n < 1) {
            throw ArgumentError("subsystem dimensions must be >= 1");
        }
    }
}

}  // namespace

std::size_t total_dimension(const DimList& dims) {
    check_dims(dims);
    std::size_t total = 1;
    for (std::size_t n : dims) {
        if (n != 0 && total > kMaxAmplitudes / n) {
            throw ArgumentError("joint dimension exceeds the supported state size");
        }
        total *= n;
    }
    return total;
}

std::size_t flat_index(const DimList& dims, const std::vector<std::size_t>& multi) {
    check_dims(dims);
    if (multi.size() != dims.size()) {
        throw ArgumentError("multi-index arity does not match dims");
    }
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (multi[j] < 1 || multi[j] > dims[j]) {
            throw ArgumentError("multi-index component out of range (indices are 1-based)");
        }
        flat = flat * dims[j] + (multi[j] - 1);
    }
    return flat;
}

std::vector<std::size_t> multi_index(const DimList& dims, std::size_t flat) {
    const std::size_t total = total_dimension(dims);
    if (flat >= total) {
        throw ArgumentError("flat offset out of range");
    }
    std::vector<std::size_t> multi(dims.size());
    for (std::size_t j = dims.size(); j-- > 0;) {
        multi[j] = flat % dims[j] + 1;
        flat /= dims[j];
    }
    return multi;
}

PureState::PureState(DimList dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    const std::size_t total = total_dimension(dims_);
    if (amplitudes_.size() != total) {
        throw DimensionError("amplitude count " + std::to_string(amplitudes_.size()) +
                             " does not match joint dimension " + std::to_string(total));
    }
}

Complex PureState::amplitude(const std::vector<std::size_t>& multi) const {
    return amplitudes_[flat_index(dims_, multi)];
}

double PureState::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

PureState make_state(DimList dims, std::vector<Complex> amplitudes) {
    return PureState(std::move(dims), std::move(amplitudes));
}

PureState normalize(const PureState& state) {
    const double n = state.norm();
    if (n == 0.0) {
        throw DegenerateStateError("cannot normalize the zero vector");
    }
    std::vector<Complex> scaled = state.amplitudes();
    for (Complex& a : scaled) {
        a /= n;
    }
    return PureState(state.dims(), std::move(scaled));
}

PureState bell_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState({2, 2}, {r, 0.0, 0.0, r});
}

PureState ghz_state(std::size_t subsystems) {
    if (subsystems < 2) {
        throw ArgumentError("ghz requires at least 2 subsystems");
    }
    DimList dims(subsystems, 2);
    std::vector<Complex> amps(total_dimension(dims), 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;  // |1,...,1>
    amps.back() = r;   // |2,...,2>
    return PureState(std::move(dims), std::move(amps));
}

PureState w_state(std::size_t subsystems) {
    if (subsystems < 2) {
        throw ArgumentError("w requires at least 2 subsystems");
    }
    DimList dims(subsystems, 2);
    std::vector<Complex> amps(total_dimension(dims), 0.0);
    const double r = 1.0 / std::sqrt(static_cast<double>(subsystems));
    // One amplitude per position of the single level-2 excitation; subsystem
    // j's index has stride 2^(m-1-j) in the flat layout.
    for (std::size_t j = 0; j < subsystems; ++j) {
        amps[std::size_t{1} << (subsystems - 1 - j)] = r;
    }
    return PureState(std::move(dims), std::move(amps));
}

PureState product_basis_state(const DimList& dims) {
    std::vector<Complex> amps(total_dimension(dims), 0.0);
    amps.front() = 1.0;
    return PureState(dims, std::move(amps));
}

PureState max_entangled_state(std::size_t levels) {
    if (levels < 2) {
        throw ArgumentError("maxent requires dimension >= 2");
    }
    DimList dims{levels, levels};
    std::vector<Complex> amps(levels * levels, 0.0);
    const double r = 1.0 / std::sqrt(static_cast<double>(levels));
    for (std::size_t i = 0; i < levels; ++i) {
        amps[i * levels + i] = r;
    }
    return PureState(std::move(dims), std::move(amps));
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ArgumentError("invalid " + std::string(what) + " in state name: '" +
                            std::string(text) + "'");
    }
    return value;
}

DimList parse_dim_spec(std::string_view text) {
    DimList dims;
    while (!text.empty()) {
        const std::size_t sep = text.find('x');
        const std::string_view head = text.substr(0, sep);
        dims.push_back(parse_count(head, "dimension"));
        if (sep == std::string_view::npos) {
            break;
        }
        text.remove_prefix(sep + 1);
        if (text.empty()) {
            throw ArgumentError("trailing separator in dimension list");
        }
    }
    if (dims.empty()) {
        throw ArgumentError("empty dimension list");
    }
    return dims;
}

}  // namespace

PureState named_state(std::string_view name) {
    const std::size_t colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);

    if (head == "bell") {
        if (!arg.empty()) {
            throw ArgumentError("bell takes no argument");
        }
        return bell_state();
    }
    if (head == "ghz") {
        return ghz_state(parse_count(arg, "subsystem count"));
    }
    if (head == "w") {
        return w_state(parse_count(arg, "subsystem count"));
    }
    if (head == "maxent") {
        return max_entangled_state(parse_count(arg, "dimension"));
    }
    if (head == "product") {
        return product_basis_state(parse_dim_spec(arg));
    }
    throw ArgumentError("unknown state name: '" + std::string(name) +
                        "' (expected bell, ghz:M, w:M, maxent:D or product:N1xN2x...)");
}

PureState random_state(const DimList& dims, std::mt19937_64& rng) {
    const std::size_t total = total_dimension(dims);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(total);
    for (Complex& a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex(re, im);
    }
    return normalize(PureState(dims, std::move(amps)));
}

PureState random_state(const DimList& dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_state(dims, rng);
}

namespace {

// Applies op to the chosen subsystem index of the flat amplitude vector.
std::vector<Complex> contract_mode(const DimList& dims, const std::vector<Complex>& amps,
                                   std::size_t mode, const Eigen::MatrixXcd& op) {
    const std::size_t n = dims[mode - 1];
    std::size_t stride = 1;
    for (std::size_t l = mode; l < dims.size(); ++l) {
        stride *= dims[l];
    }
    const std::size_t outer = amps.size() / (n * stride);
    std::vector<Complex> out(amps.size());
    for (std::size_t o = 0; o < outer; ++o) {
        const std::size_t block = o * n * stride;
        for (std::size_t inner = 0; inner < stride; ++inner) {
            for (std::size_t r = 0; r < n; ++r) {
                Complex acc = 0.0;
                for (std::size_t c = 0; c < n; ++c) {
                    acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                           amps[block + c * stride + inner];
                }
                out[block + r * stride] = acc;
            }
        }
    }
    return out;
}

void check_mode_matrix(const PureState& state, std::size_t subsystem,
                       const Eigen::MatrixXcd& op) {
    if (subsystem < 1 || subsystem > state.subsystem_count()) {
        throw ArgumentError("subsystem index out of range (1-based)");
    }
    const auto n = static_cast<Eigen::Index>(state.dims()[subsystem - 1]);
    if (op.rows() != n || op.cols() != n) {
        throw ArgumentError("matrix dimension does not match the subsystem dimension");
    }
}

}  // namespace

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u) {
    check_mode_matrix(state, u.subsystem, u.matrix);
    const Eigen::MatrixXcd gram = u.matrix.adjoint() * u.matrix;
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(u.matrix.rows(), u.matrix.cols());
    if ((gram - eye).cwiseAbs().maxCoeff() > 1e-10) {
        throw ArgumentError("matrix is not unitary within 1e-10");
    }
    return PureState(state.dims(),
                     contract_mode(state.dims(), state.amplitudes(), u.subsystem, u.matrix));
}

PureState apply_local_filter(const PureState& state, std::size_t subsystem,
                             const Eigen::MatrixXcd& op) {
    check_mode_matrix(state, subsystem, op);
    return normalize(PureState(state.dims(),
                               contract_mode(state.dims(), state.amplitudes(), subsystem, op)));
}

PureState tensor_product(const PureState& a, const PureState& b) {
    DimList dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<Complex> amps;
    amps.reserve(a.size() * b.size());
    for (const Complex& x : a.amplitudes()) {
        for (const Complex& y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return PureState(std::move(dims), std::move(amps));
}

}  // namespace qwedge
