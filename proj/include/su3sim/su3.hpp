// su3.hpp — Gell-Mann matrices, SU(3) shift operators, and structure constants.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace su3sim {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;

// Basis ordering used throughout the library:
//   e1 = |+> (upper level), e2 = |0> (middle level), e3 = |-> (lower level).

// Gell-Mann matrix lambda_i, 1-based index i in [1, 8].
// Throws std::invalid_argument for an index out of range.
Matrix3c gell_mann(int i);

// Atomic amplitudes on (|->, |0>, |+>).
struct AtomState {
    Complex c_minus{0.0};
    Complex c_zero{0.0};
    Complex c_plus{0.0};

    // Column vector in the (|+>, |0>, |->) matrix basis.
    Eigen::Vector3cd ket() const;
    // Pure-state density |psi><psi|.
    Matrix3c density() const;
    double norm2() const;

    static AtomState lower()  { return {1.0, 0.0, 0.0}; }
    static AtomState middle() { return {0.0, 1.0, 0.0}; }
    static AtomState upper()  { return {0.0, 0.0, 1.0}; }
};

// Ladder and population-difference operators of the three two-level
// subsystems inside SU(3): T couples (+,0), U couples (0,-), V couples (+,-).
struct ShiftOperators {
    Matrix3c t_plus, t_minus, t3;
    Matrix3c u_plus, u_minus, u3;
    Matrix3c v_plus, v_minus, v3;
};

ShiftOperators shift_operators();

// Antisymmetric f and symmetric d tensors of the su(3) algebra,
//   f_ijk = Tr([l_i, l_j] l_k) / (4i),   d_ijk = Tr({l_i, l_j} l_k) / 4.
struct StructureConstants {
    std::array<double, 8 * 8 * 8> f{};
    std::array<double, 8 * 8 * 8> d{};

    // 1-based indices
    double f_at(int i, int j, int k) const { return f[idx(i, j, k)]; }
    double d_at(int i, int j, int k) const { return d[idx(i, j, k)]; }

    static std::size_t idx(int i, int j, int k);
};

StructureConstants structure_constants();

} // namespace su3sim
