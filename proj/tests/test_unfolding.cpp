#include "qwedge/unfolding.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

#include "qwedge/errors.hpp"
#include "qwedge/sampling.hpp"
#include "qwedge/state.hpp"

using qwedge::Complex;
using qwedge::PureState;
using qwedge::Unfolding;
using qwedge::unfold;

TEST_CASE("three-qubit unfoldings lay out rows by the mode index") {
    // Amplitudes 0..7 so each entry identifies its multi-index: the value at
    // (k1,k2,k3) is 4(k1-1) + 2(k2-1) + (k3-1).
    std::vector<Complex> amps(8);
    for (std::size_t i = 0; i < 8; ++i) {
        amps[i] = static_cast<double>(i);
    }
    const PureState s = qwedge::make_state({2, 2, 2}, amps);

    const Unfolding m1 = unfold(s, 1);
    CHECK(m1.rows() == 2);
    CHECK(m1.cols() == 4);
    // Row 1: (a111, a112, a121, a122); row 2: (a211, a212, a221, a222).
    CHECK(m1.row(1) == std::vector<Complex>{0.0, 1.0, 2.0, 3.0});
    CHECK(m1.row(2) == std::vector<Complex>{4.0, 5.0, 6.0, 7.0});

    const Unfolding m2 = unfold(s, 2);
    // Row 1: (a111, a112, a211, a212); row 2: (a121, a122, a221, a222).
    CHECK(m2.row(1) == std::vector<Complex>{0.0, 1.0, 4.0, 5.0});
    CHECK(m2.row(2) == std::vector<Complex>{2.0, 3.0, 6.0, 7.0});

    const Unfolding m3 = unfold(s, 3);
    // Columns run over (k1,k2) row-major: row 1 = (a111, a121, a211, a221).
    CHECK(m3.row(1) == std::vector<Complex>{0.0, 2.0, 4.0, 6.0});
    CHECK(m3.row(2) == std::vector<Complex>{1.0, 3.0, 5.0, 7.0});
}

TEST_CASE("bipartite mode-1 unfolding is the coefficient matrix itself") {
    const PureState bell = qwedge::bell_state();
    const Unfolding u = unfold(bell, 1);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(u.entries()(0, 0).real() == doctest::Approx(r).epsilon(1e-14));
    CHECK(u.entries()(0, 1) == Complex(0.0, 0.0));
    CHECK(u.entries()(1, 0) == Complex(0.0, 0.0));
    CHECK(u.entries()(1, 1).real() == doctest::Approx(r).epsilon(1e-14));

    // Generic [2,3] state: entry (r,c) is exactly amplitude (r,c).
    std::vector<Complex> amps(6);
    for (std::size_t i = 0; i < 6; ++i) {
        amps[i] = Complex(static_cast<double>(i), -0.5 * static_cast<double>(i));
    }
    const PureState s = qwedge::make_state({2, 3}, amps);
    const Unfolding m1 = unfold(s, 1);
    for (std::size_t r1 = 1; r1 <= 2; ++r1) {
        for (std::size_t c = 1; c <= 3; ++c) {
            CHECK(m1.entries()(static_cast<Eigen::Index>(r1 - 1),
                               static_cast<Eigen::Index>(c - 1)) == s.amplitude({r1, c}));
        }
    }
}

TEST_CASE("row extraction checks bounds") {
    const Unfolding u = unfold(qwedge::bell_state(), 1);
    CHECK(u.row(1)[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS((void)u.row(0), qwedge::ArgumentError);
    CHECK_THROWS_AS((void)u.row(3), qwedge::ArgumentError);
    CHECK_THROWS_AS((void)unfold(qwedge::bell_state(), 0), qwedge::ArgumentError);
    CHECK_THROWS_AS((void)unfold(qwedge::bell_state(), 3), qwedge::ArgumentError);
}

TEST_CASE("ghz(3) mode-2 row 2") {
    const Unfolding u = unfold(qwedge::ghz_state(3), 2);
    const std::vector<Complex> row = u.row(2);
    CHECK(row[0] == Complex(0.0, 0.0));
    CHECK(row[1] == Complex(0.0, 0.0));
    CHECK(row[2] == Complex(0.0, 0.0));
    CHECK(row[3].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("gram matrix basics") {
    const Eigen::MatrixXcd bell_gram = unfold(qwedge::bell_state(), 1).gram_matrix();
    CHECK(bell_gram(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bell_gram(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(bell_gram(0, 1)) <= 1e-15);

    const Eigen::MatrixXcd basis_gram =
        unfold(qwedge::product_basis_state({2, 2}), 1).gram_matrix();
    CHECK(basis_gram(0, 0) == Complex(1.0, 0.0));
    CHECK(basis_gram(1, 1) == Complex(0.0, 0.0));

    std::mt19937_64 rng(41);
    const PureState s = qwedge::random_state({3, 2, 2}, rng);
    for (std::size_t mode = 1; mode <= 3; ++mode) {
        const Eigen::MatrixXcd g = unfold(s, mode).gram_matrix();
        CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(std::abs(g.trace().real() - 1.0) <= 1e-12);
        CHECK(std::abs(g.trace().imag()) <= 1e-14);
    }
}

TEST_CASE("unfolding norms equal the state norm") {
    std::mt19937_64 rng(43);
    const PureState s = qwedge::random_state({2, 3, 4}, rng);
    for (std::size_t mode = 1; mode <= 3; ++mode) {
        CHECK(std::abs(unfold(s, mode).frobenius_norm() - 1.0) <= 1e-12);
    }
    const PureState raw = qwedge::make_state({2, 2}, {3.0, 0.0, 0.0, 4.0});
    CHECK(unfold(raw, 2).frobenius_norm() == doctest::Approx(raw.norm()).epsilon(1e-14));
}

TEST_CASE("gram matrix transforms covariantly under local unitaries") {
    std::mt19937_64 rng(47);
    const PureState s = qwedge::random_state({3, 2, 2}, rng);

    // A unitary on another subsystem leaves the mode-1 Gram matrix alone.
    const qwedge::LocalUnitary u_other{2, qwedge::random_unitary(2, rng)};
    const Eigen::MatrixXcd before = unfold(s, 1).gram_matrix();
    const Eigen::MatrixXcd after = unfold(qwedge::apply_local_unitary(s, u_other), 1).gram_matrix();
    CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-10);

    // A unitary on the mode subsystem conjugates it.
    const Eigen::MatrixXcd v = qwedge::random_unitary(3, rng);
    const Eigen::MatrixXcd conjugated =
        unfold(qwedge::apply_local_unitary(s, {1, v}), 1).gram_matrix();
    CHECK((conjugated - v * before * v.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("single-row unfolding for a trivial subsystem") {
    const PureState s = qwedge::make_state({1, 3}, {1.0, 2.0, 3.0});
    const Unfolding u = unfold(s, 1);
    CHECK(u.rows() == 1);
    CHECK(u.cols() == 3);
    CHECK(u.row(1) == std::vector<Complex>{1.0, 2.0, 3.0});
}
