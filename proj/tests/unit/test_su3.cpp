#include <doctest.h>

#include <cmath>

#include "su3sim/su3.hpp"

using namespace su3sim;

namespace {

double max_abs(const Matrix3c& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("gell_mann matrices match their defining entries") {
    Matrix3c l3 = Matrix3c::Zero();
    l3(0, 0) = 1.0;
    l3(1, 1) = -1.0;
    CHECK(max_abs(gell_mann(3) - l3) == 0.0);

    Matrix3c l8 = Matrix3c::Zero();
    const double r3 = 1.0 / std::sqrt(3.0);
    l8(0, 0) = r3;
    l8(1, 1) = r3;
    l8(2, 2) = -2.0 * r3;
    CHECK(max_abs(gell_mann(8) - l8) < 1e-15);

    CHECK(std::abs((gell_mann(4) * gell_mann(4)).trace().real() - 2.0) < 1e-15);

    CHECK_THROWS_AS(gell_mann(0), std::invalid_argument);
    CHECK_THROWS_AS(gell_mann(9), std::invalid_argument);
}

TEST_CASE("gell_mann matrices are traceless, Hermitian, and orthonormal") {
    for (int i = 1; i <= 8; ++i) {
        const Matrix3c li = gell_mann(i);
        CHECK(std::abs(li.trace()) < 1e-15);
        CHECK(max_abs(li - li.adjoint()) == 0.0);
        for (int j = 1; j <= 8; ++j) {
            const double expected = i == j ? 2.0 : 0.0;
            CHECK(std::abs((li * gell_mann(j)).trace().real() - expected) < 1e-14);
        }
    }
}

TEST_CASE("shift operators recover the expected ladder structure") {
    const ShiftOperators ops = shift_operators();

    Matrix3c v3 = Matrix3c::Zero();
    v3(0, 0) = 1.0;
    v3(2, 2) = -1.0;
    CHECK(max_abs(ops.v3 - v3) < 1e-15);

    Matrix3c u3 = Matrix3c::Zero();
    u3(1, 1) = 1.0;
    u3(2, 2) = -1.0;
    CHECK(max_abs(ops.u3 - u3) < 1e-15);

    Matrix3c t3 = Matrix3c::Zero();
    t3(0, 0) = 1.0;
    t3(1, 1) = -1.0;
    CHECK(max_abs(ops.t3 - t3) == 0.0);

    Matrix3c tp = Matrix3c::Zero();
    tp(0, 1) = 1.0;
    CHECK(max_abs(ops.t_plus - tp) < 1e-15);

    CHECK(max_abs(ops.t_minus - ops.t_plus.adjoint()) < 1e-15);
    CHECK(max_abs(ops.u_minus - ops.u_plus.adjoint()) < 1e-15);
    CHECK(max_abs(ops.v_minus - ops.v_plus.adjoint()) < 1e-15);
}

TEST_CASE("structure constants reproduce the canonical values") {
    const StructureConstants sc = structure_constants();
    CHECK(sc.f_at(1, 2, 3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sc.f_at(1, 1, 8) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sc.d_at(1, 1, 8) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(sc.f_at(1, 4, 7) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sc.f_at(4, 5, 8) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("f is totally antisymmetric and d totally symmetric") {
    const StructureConstants sc = structure_constants();
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) {
            for (int k = 1; k <= 8; ++k) {
                CHECK(sc.f_at(i, j, k) == doctest::Approx(-sc.f_at(j, i, k)).epsilon(1e-13));
                CHECK(sc.f_at(i, j, k) == doctest::Approx(sc.f_at(j, k, i)).epsilon(1e-13));
                CHECK(sc.d_at(i, j, k) == doctest::Approx(sc.d_at(j, i, k)).epsilon(1e-13));
                CHECK(sc.d_at(i, j, k) == doctest::Approx(sc.d_at(j, k, i)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("commutator and anticommutator identities close to 1e-12") {
    const StructureConstants sc = structure_constants();
    const Complex two_i{0.0, 2.0};
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) {
            const Matrix3c li = gell_mann(i);
            const Matrix3c lj = gell_mann(j);
            Matrix3c comm = li * lj - lj * li;
            Matrix3c anti = li * lj + lj * li;
            if (i == j) {
                anti -= (4.0 / 3.0) * Matrix3c::Identity();
            }
            for (int k = 1; k <= 8; ++k) {
                comm -= two_i * sc.f_at(i, j, k) * gell_mann(k);
                anti -= 2.0 * sc.d_at(i, j, k) * gell_mann(k);
            }
            CHECK(max_abs(comm) < 1e-12);
            CHECK(max_abs(anti) < 1e-12);
        }
    }
}
