// bloch.hpp — rotating-frame Hamiltonians, 8x8 Bloch generators, and Bloch-vector dynamics.

#pragma once

#include <Eigen/Dense>

#include <utility>

#include "su3sim/su3.hpp"

namespace su3sim {

enum class Configuration { Lambda, Vee, Cascade };

const char* configuration_name(Configuration c);

// Semiclassical drive parameters; couplings and detunings in rad/time, hbar = 1.
struct SemiclassicalParams {
    Configuration config{Configuration::Lambda};
    double kappa1{0.0};
    double kappa2{0.0};
    double delta1{0.0};
    double delta2{0.0};

    bool resonant() const { return delta1 == 0.0 && delta2 == 0.0; }
};

// s_i = Tr(rho lambda_i); component i (1-based in formulas) lives at s[i-1].
using BlochVector = Eigen::Matrix<double, 8, 1>;
// Antisymmetric generator of the Bloch flow ds/dt = M s.
using BlochMatrix = Eigen::Matrix<double, 8, 8>;

// Time-independent rotating-frame Hamiltonian of the configuration (Hermitian).
Matrix3c rotating_frame_hamiltonian(const SemiclassicalParams& p);

// The 8x8 Bloch generator for the configuration. Antisymmetric by construction.
BlochMatrix bloch_matrix(const SemiclassicalParams& p);

// Equivalent construction from the Hamiltonian via the structure constants,
// M_ik = 2 sum_a h_a f_aik with H = sum_a h_a lambda_a (+ trace part).
// Serves as an independent route against the tabulated matrices.
BlochMatrix bloch_matrix_from_hamiltonian(const Matrix3c& h);

// Validates hermiticity and unit trace; throws std::invalid_argument otherwise.
BlochVector bloch_from_density(const Matrix3c& rho);

// rho = (1/3)(I + (3/2) sum_i s_i lambda_i); inverse of bloch_from_density.
Matrix3c density_from_bloch(const BlochVector& s);

// s(t) = exp(M t) s0 by dense scaling-and-squaring matrix exponential.
BlochVector evolve_bloch(const BlochMatrix& m, const BlochVector& s0, double t);

// Density-matrix route: rho(t) = U^dag rho0 U with U = exp(-i h t).
// The orientation of the conjugation matches the generators of bloch_matrix(),
// so both routes trace the same Bloch trajectory.
Matrix3c evolve_density(const Matrix3c& h, const Matrix3c& rho0, double t);

// At resonance the Bloch sphere splits into a 3-component and a 5-component
// sector; these are the conserved values of the two subset sums expressed in
// the initial atomic amplitudes (squared moduli for complex input).
// first = 3-subset sum, second = 5-subset sum; they add to (4/3) |psi|^4.
std::pair<double, double> resonant_invariant_values(Configuration c, const AtomState& atom);

} // namespace su3sim
