#include "su3sim/bloch.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace su3sim {

namespace {

const Complex kI{0.0, 1.0};
const double kSqrt3 = std::sqrt(3.0);

} // namespace

const char* configuration_name(Configuration c) {
    switch (c) {
    case Configuration::Lambda:
        return "lambda";
    case Configuration::Vee:
        return "vee";
    case Configuration::Cascade:
        return "cascade";
    }
    return "?";
}

Matrix3c rotating_frame_hamiltonian(const SemiclassicalParams& p) {
    const double k1 = p.kappa1;
    const double k2 = p.kappa2;
    const double d1 = p.delta1;
    const double d2 = p.delta2;
    Matrix3c h = Matrix3c::Zero();
    switch (p.config) {
    case Configuration::Lambda:
        h(0, 0) = (d1 + d2) / 3.0;
        h(1, 1) = (d1 - 2.0 * d2) / 3.0;
        h(2, 2) = (d2 - 2.0 * d1) / 3.0;
        h(0, 1) = h(1, 0) = k2;
        h(0, 2) = h(2, 0) = k1;
        break;
    case Configuration::Vee:
        h(0, 0) = (2.0 * d1 - d2) / 3.0;
        h(1, 1) = (2.0 * d2 - d1) / 3.0;
        h(2, 2) = -(d1 + d2) / 3.0;
        h(0, 2) = h(2, 0) = k1;
        h(1, 2) = h(2, 1) = k2;
        break;
    case Configuration::Cascade:
        h(0, 0) = (d1 + 2.0 * d2) / 3.0;
        h(1, 1) = (d1 - d2) / 3.0;
        h(2, 2) = -(2.0 * d1 + d2) / 3.0;
        h(0, 1) = h(1, 0) = k2;
        h(1, 2) = h(2, 1) = k1;
        break;
    }
    return h;
}

BlochMatrix bloch_matrix(const SemiclassicalParams& p) {
    const double k1 = p.kappa1;
    const double k2 = p.kappa2;
    const double d1 = p.delta1;
    const double d2 = p.delta2;
    BlochMatrix m = BlochMatrix::Zero();

    // Only the upper triangle is assigned; the lower half follows by
    // antisymmetry, which the tabulated generators satisfy exactly.
    auto set = [&m](int i, int j, double v) {
        m(i - 1, j - 1) = v;
        m(j - 1, i - 1) = -v;
    };

    switch (p.config) {
    case Configuration::Lambda:
        set(1, 2, d2);
        set(1, 7, -k1);
        set(2, 3, 2.0 * k2);
        set(2, 6, -k1);
        set(3, 5, -k1);
        set(4, 5, d1);
        set(4, 7, k2);
        set(5, 6, -k2);
        set(5, 8, kSqrt3 * k1);
        set(6, 7, d1 - d2);
        break;
    case Configuration::Vee:
        set(1, 2, d1 - d2);
        set(1, 5, -k2);
        set(1, 7, -k1);
        set(2, 4, k2);
        set(2, 6, -k1);
        set(3, 5, -k1);
        set(3, 7, k2);
        set(4, 5, d1);
        set(5, 8, kSqrt3 * k1);
        set(6, 7, d2);
        set(7, 8, kSqrt3 * k2);
        break;
    case Configuration::Cascade:
        set(1, 2, d2);
        set(1, 5, -k1);
        set(2, 3, 2.0 * k2);
        set(2, 4, k1);
        set(3, 7, k1);
        set(4, 5, d1 + d2);
        set(4, 7, k2);
        set(5, 6, -k2);
        set(6, 7, d1);
        set(7, 8, kSqrt3 * k1);
        break;
    }
    return m;
}

BlochMatrix bloch_matrix_from_hamiltonian(const Matrix3c& h) {
    static const StructureConstants sc = structure_constants();
    std::array<double, 8> coeff{};
    for (int a = 1; a <= 8; ++a) {
        coeff[a - 1] = 0.5 * (h * gell_mann(a)).trace().real();
    }
    BlochMatrix m = BlochMatrix::Zero();
    for (int i = 1; i <= 8; ++i) {
        for (int k = 1; k <= 8; ++k) {
            double v = 0.0;
            for (int a = 1; a <= 8; ++a) {
                v += coeff[a - 1] * sc.f_at(a, i, k);
            }
            m(i - 1, k - 1) = 2.0 * v;
        }
    }
    return m;
}

BlochVector bloch_from_density(const Matrix3c& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("bloch_from_density: density matrix must be Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-9) {
        throw std::invalid_argument("bloch_from_density: density matrix must have unit trace");
    }
    BlochVector s;
    for (int i = 1; i <= 8; ++i) {
        const Complex tr = (rho * gell_mann(i)).trace();
        s(i - 1) = tr.real();
    }
    return s;
}

Matrix3c density_from_bloch(const BlochVector& s) {
    Matrix3c rho = Matrix3c::Identity();
    for (int i = 1; i <= 8; ++i) {
        rho += 1.5 * s(i - 1) * gell_mann(i);
    }
    return rho / 3.0;
}

BlochVector evolve_bloch(const BlochMatrix& m, const BlochVector& s0, double t) {
    if (t == 0.0) {
        return s0;
    }
    const BlochMatrix propagator = (m * t).exp();
    return propagator * s0;
}

Matrix3c evolve_density(const Matrix3c& h, const Matrix3c& rho0, double t) {
    if (t == 0.0) {
        return rho0;
    }
    Eigen::SelfAdjointEigenSolver<Matrix3c> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("evolve_density: eigendecomposition failed");
    }
    const Eigen::Vector3d ev = solver.eigenvalues();
    const Matrix3c v = solver.eigenvectors();
    Eigen::Vector3cd phases;
    for (int k = 0; k < 3; ++k) {
        phases(k) = std::exp(-kI * ev(k) * t);
    }
    const Matrix3c u = v * phases.asDiagonal() * v.adjoint(); // exp(-i h t)
    return u.adjoint() * rho0 * u;
}

std::pair<double, double> resonant_invariant_values(Configuration c, const AtomState& atom) {
    const double pm = std::norm(atom.c_minus);
    const double p0 = std::norm(atom.c_zero);
    const double pp = std::norm(atom.c_plus);
    double three = 0.0;
    switch (c) {
    case Configuration::Lambda:
        three = 4.0 * pp * (p0 + pm);
        break;
    case Configuration::Vee:
        three = 4.0 * pm * (p0 + pp);
        break;
    case Configuration::Cascade:
        three = 4.0 * p0 * (pm + pp);
        break;
    }
    const double total = pm + p0 + pp;
    const double five = (4.0 / 3.0) * total * total - three;
    return {three, five};
}

} // namespace su3sim
