#include "qwedge/state.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

#include "qwedge/errors.hpp"
#include "qwedge/sampling.hpp"
#include "qwedge/types.hpp"

using qwedge::Complex;
using qwedge::DimList;
using qwedge::PureState;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("make_state stores amplitudes verbatim") {
    const PureState s = qwedge::make_state({2, 2}, {1.0, 0.0, 0.0, 0.0});
    CHECK(s.dims() == DimList{2, 2});
    CHECK(s.size() == 4);
    CHECK(s[0] == Complex(1.0, 0.0));
    CHECK(s.amplitude({1, 1}) == Complex(1.0, 0.0));
    CHECK(s.amplitude({2, 2}) == Complex(0.0, 0.0));

    const PureState unnormalized = qwedge::make_state({2}, {3.0, 4.0});
    CHECK(unnormalized.norm() == doctest::Approx(5.0));
}

TEST_CASE("make_state rejects bad inputs") {
    CHECK_THROWS_AS(qwedge::make_state({2, 3}, std::vector<Complex>(5)),
                    qwedge::DimensionError);
    CHECK_THROWS_AS(qwedge::make_state({}, {}), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::make_state({2, 0}, std::vector<Complex>(0)),
                    qwedge::ArgumentError);
}

TEST_CASE("normalize") {
    const PureState s = qwedge::normalize(qwedge::make_state({2, 2}, {2.0, 0.0, 0.0, 0.0}));
    CHECK(s[0] == Complex(1.0, 0.0));

    const PureState t = qwedge::normalize(qwedge::make_state({2, 2}, {1.0, 0.0, 0.0, 1.0}));
    CHECK(t[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(std::abs(t.norm() - 1.0) <= 1e-12);

    CHECK_THROWS_AS(qwedge::normalize(qwedge::make_state({2, 2}, std::vector<Complex>(4))),
                    qwedge::DegenerateStateError);
}

TEST_CASE("named reference states") {
    const PureState ghz3 = qwedge::ghz_state(3);
    CHECK(ghz3.amplitude({1, 1, 1}).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(ghz3.amplitude({2, 2, 2}).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(ghz3.amplitude({1, 2, 1}) == Complex(0.0, 0.0));

    const PureState w3 = qwedge::w_state(3);
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(w3.amplitude({2, 1, 1}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(w3.amplitude({1, 2, 1}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(w3.amplitude({1, 1, 2}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(w3.amplitude({2, 2, 1}) == Complex(0.0, 0.0));

    const PureState me3 = qwedge::max_entangled_state(3);
    CHECK(me3.dims() == DimList{3, 3});
    CHECK(me3.amplitude({1, 1}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(me3.amplitude({2, 2}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(me3.amplitude({3, 3}).real() == doctest::Approx(r3).epsilon(1e-14));
    CHECK(me3.amplitude({1, 2}) == Complex(0.0, 0.0));

    CHECK(qwedge::bell_state().amplitude({2, 2}).real() ==
          doctest::Approx(kInvSqrt2).epsilon(1e-14));

    CHECK_THROWS_AS(qwedge::ghz_state(1), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::w_state(0), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::max_entangled_state(1), qwedge::ArgumentError);
}

TEST_CASE("named_state string parsing") {
    CHECK(qwedge::named_state("bell").dims() == DimList{2, 2});
    CHECK(qwedge::named_state("ghz:4").dims() == DimList{2, 2, 2, 2});
    CHECK(qwedge::named_state("w:3").dims() == DimList{2, 2, 2});
    CHECK(qwedge::named_state("maxent:5").dims() == DimList{5, 5});
    CHECK(qwedge::named_state("product:2x3x2").dims() == DimList{2, 3, 2});
    CHECK(qwedge::named_state("product:2x3x2")[0] == Complex(1.0, 0.0));

    CHECK_THROWS_AS(qwedge::named_state("ghz:1"), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::named_state("ghz"), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::named_state("ghz:x"), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::named_state("bell:2"), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::named_state("nope"), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::named_state("product:2x"), qwedge::ArgumentError);
}

TEST_CASE("multi-index round trip") {
    const DimList dims = {2, 3, 4};
    for (std::size_t flat = 0; flat < qwedge::total_dimension(dims); ++flat) {
        CHECK(qwedge::flat_index(dims, qwedge::multi_index(dims, flat)) == flat);
    }
    CHECK(qwedge::flat_index(dims, {1, 1, 1}) == 0);
    CHECK(qwedge::flat_index(dims, {1, 1, 2}) == 1);  // last index fastest
    CHECK(qwedge::flat_index(dims, {2, 1, 1}) == 12);
    CHECK_THROWS_AS(qwedge::flat_index(dims, {0, 1, 1}), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::flat_index(dims, {1, 1}), qwedge::ArgumentError);
    CHECK_THROWS_AS(qwedge::multi_index(dims, 24), qwedge::ArgumentError);
}

TEST_CASE("random_state is deterministic and unit-norm") {
    const PureState a = qwedge::random_state({2, 2, 2}, 7);
    const PureState b = qwedge::random_state({2, 2, 2}, 7);
    CHECK(a.size() == 8);
    REQUIRE(a.amplitudes().size() == b.amplitudes().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);  // bitwise equal
    }
    CHECK(std::abs(a.norm() - 1.0) <= 1e-12);

    const PureState c = qwedge::random_state({2, 2, 2}, 8);
    bool any_different = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        any_different = any_different || a[i] != c[i];
    }
    CHECK(any_different);
}

TEST_CASE("apply_local_unitary") {
    const PureState basis = qwedge::product_basis_state({2, 2});

    SUBCASE("identity leaves the state unchanged") {
        const qwedge::LocalUnitary id{2, Eigen::MatrixXcd::Identity(2, 2)};
        const PureState out = qwedge::apply_local_unitary(basis, id);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(out[i] == basis[i]);
        }
    }

    SUBCASE("bit flip on subsystem 1 maps |1,1> to |2,1>") {
        Eigen::MatrixXcd x(2, 2);
        x << 0.0, 1.0, 1.0, 0.0;
        const PureState out = qwedge::apply_local_unitary(basis, {1, x});
        CHECK(out.amplitude({2, 1}) == Complex(1.0, 0.0));
        CHECK(out.amplitude({1, 1}) == Complex(0.0, 0.0));
    }

    SUBCASE("norm is preserved for random unitaries") {
        std::mt19937_64 rng(23);
        const PureState s = qwedge::random_state({3, 2, 4}, rng);
        for (int trial = 0; trial < 20; ++trial) {
            const qwedge::LocalUnitary u = qwedge::random_local_unitary(s.dims(), rng);
            CHECK(std::abs(qwedge::apply_local_unitary(s, u).norm() - 1.0) <= 1e-12);
        }
    }

    SUBCASE("rejects non-unitary and mismatched matrices") {
        Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
        CHECK_THROWS_AS(qwedge::apply_local_unitary(basis, {1, bad}), qwedge::ArgumentError);
        CHECK_THROWS_AS(qwedge::apply_local_unitary(basis, {3, Eigen::MatrixXcd::Identity(2, 2)}),
                        qwedge::ArgumentError);
        CHECK_THROWS_AS(qwedge::apply_local_unitary(basis, {1, Eigen::MatrixXcd::Identity(3, 3)}),
                        qwedge::ArgumentError);
    }
}

TEST_CASE("apply_local_filter renormalizes") {
    std::mt19937_64 rng(29);
    const PureState s = qwedge::random_state({2, 2}, rng);
    Eigen::MatrixXcd a(2, 2);
    a << 2.0, 0.0, 0.0, 0.5;
    const PureState filtered = qwedge::apply_local_filter(s, 1, a);
    CHECK(std::abs(filtered.norm() - 1.0) <= 1e-12);
}

TEST_CASE("tensor_product multiplies amplitudes with combined layout") {
    const PureState a = qwedge::make_state({2}, {Complex(0.6, 0.0), Complex(0.0, 0.8)});
    const PureState b = qwedge::make_state({3}, {1.0, 2.0, 3.0});
    const PureState p = qwedge::tensor_product(a, b);
    CHECK(p.dims() == DimList{2, 3});
    CHECK(p.amplitude({1, 2}) == a[0] * b[1]);
    CHECK(p.amplitude({2, 3}) == a[1] * b[2]);
}

TEST_CASE("random unitaries are unitary and random filters well-conditioned") {
    std::mt19937_64 rng(31);
    for (std::size_t n : {2u, 3u, 5u}) {
        const Eigen::MatrixXcd u = qwedge::random_unitary(n, rng);
        const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        CHECK((u.adjoint() * u - eye).cwiseAbs().maxCoeff() <= 1e-12);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd f = qwedge::random_filter(3, rng);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
        CHECK(svd.singularValues().minCoeff() > 0.0);
        CHECK(svd.singularValues().maxCoeff() / svd.singularValues().minCoeff() <= 1e3);
    }
}

TEST_CASE("random_product_state has the requested dims and unit norm") {
    std::mt19937_64 rng(37);
    const PureState s = qwedge::random_product_state({3, 2, 4}, rng);
    CHECK(s.dims() == DimList{3, 2, 4});
    CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
}
