#include "su3sim/su3.hpp"

#include <cmath>
#include <stdexcept>

namespace su3sim {

namespace {

const Complex kI{0.0, 1.0};

Matrix3c from_rows(std::initializer_list<Complex> entries) {
    Matrix3c m;
    int pos = 0;
    for (const Complex& e : entries) {
        m(pos / 3, pos % 3) = e;
        ++pos;
    }
    return m;
}

} // namespace

Eigen::Vector3cd AtomState::ket() const {
    return Eigen::Vector3cd(c_plus, c_zero, c_minus);
}

Matrix3c AtomState::density() const {
    const Eigen::Vector3cd v = ket();
    return v * v.adjoint();
}

double AtomState::norm2() const {
    return std::norm(c_minus) + std::norm(c_zero) + std::norm(c_plus);
}

Matrix3c gell_mann(int i) {
    const double r3 = 1.0 / std::sqrt(3.0);
    switch (i) {
    case 1:
        return from_rows({0, 1, 0, 1, 0, 0, 0, 0, 0});
    case 2:
        return from_rows({0, -kI, 0, kI, 0, 0, 0, 0, 0});
    case 3:
        return from_rows({1, 0, 0, 0, -1, 0, 0, 0, 0});
    case 4:
        return from_rows({0, 0, 1, 0, 0, 0, 1, 0, 0});
    case 5:
        return from_rows({0, 0, -kI, 0, 0, 0, kI, 0, 0});
    case 6:
        return from_rows({0, 0, 0, 0, 0, 1, 0, 1, 0});
    case 7:
        return from_rows({0, 0, 0, 0, 0, -kI, 0, kI, 0});
    case 8:
        return from_rows({r3, 0, 0, 0, r3, 0, 0, 0, -2.0 * r3});
    default:
        throw std::invalid_argument("gell_mann: index must be in [1, 8]");
    }
}

ShiftOperators shift_operators() {
    ShiftOperators ops;
    ops.t_plus = 0.5 * (gell_mann(1) + kI * gell_mann(2));
    ops.t_minus = 0.5 * (gell_mann(1) - kI * gell_mann(2));
    ops.u_plus = 0.5 * (gell_mann(6) + kI * gell_mann(7));
    ops.u_minus = 0.5 * (gell_mann(6) - kI * gell_mann(7));
    ops.v_plus = 0.5 * (gell_mann(4) + kI * gell_mann(5));
    ops.v_minus = 0.5 * (gell_mann(4) - kI * gell_mann(5));
    ops.t3 = gell_mann(3);
    ops.v3 = 0.5 * (std::sqrt(3.0) * gell_mann(8) + gell_mann(3));
    ops.u3 = 0.5 * (std::sqrt(3.0) * gell_mann(8) - gell_mann(3));
    return ops;
}

std::size_t StructureConstants::idx(int i, int j, int k) {
    if (i < 1 || i > 8 || j < 1 || j > 8 || k < 1 || k > 8) {
        throw std::invalid_argument("StructureConstants: indices must be in [1, 8]");
    }
    return static_cast<std::size_t>((i - 1) * 64 + (j - 1) * 8 + (k - 1));
}

StructureConstants structure_constants() {
    StructureConstants sc;
    std::array<Matrix3c, 8> lambda;
    for (int i = 0; i < 8; ++i) {
        lambda[i] = gell_mann(i + 1);
    }
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) {
            const Matrix3c comm = lambda[i - 1] * lambda[j - 1] - lambda[j - 1] * lambda[i - 1];
            const Matrix3c anti = lambda[i - 1] * lambda[j - 1] + lambda[j - 1] * lambda[i - 1];
            for (int k = 1; k <= 8; ++k) {
                sc.f[StructureConstants::idx(i, j, k)] =
                    ((comm * lambda[k - 1]).trace() / (4.0 * kI)).real();
                sc.d[StructureConstants::idx(i, j, k)] =
                    ((anti * lambda[k - 1]).trace() / 4.0).real();
            }
        }
    }
    return sc;
}

} // namespace su3sim
