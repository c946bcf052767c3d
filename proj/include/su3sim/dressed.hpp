// dressed.hpp — Euler-angle dressed states of the quantized three-level systems:
// photon-number Hamiltonian blocks, closed-form and spectral time amplitudes, and
// the entangled atom-field state over a truncated coherent field.

#pragma once

#include <Eigen/Dense>

#include <array>

#include "su3sim/bloch.hpp"
#include "su3sim/su3.hpp"

namespace su3sim {

enum class AtomLevel { Lower, Middle, Upper };

const char* level_name(AtomLevel level);

// Index of the level in the (|+>, |0>, |->) matrix basis: Upper -> 0,
// Middle -> 1, Lower -> 2.
int level_slot(AtomLevel level);

// Quantized couplings at resonance. The equidistant cascade is restricted to a
// single mode with g1 = g2; the constructor enforces the constraint.
struct QuantizedParams {
    Configuration config{Configuration::Lambda};
    double g1{0.0};
    double g2{0.0};

    QuantizedParams(Configuration c, double g1_, double g2_);
    double g() const { return g1; } // cascade shorthand
};

// 3x3 interaction block over the product states reachable from the initial
// (level, photon) choice by the one-photon selection rules. Basis slots are
// ordered (+, 0, -) with the photon labels shifted per slot. The cascade uses
// the single index n; m is ignored there.
// Throws std::domain_error when a required photon index would be negative.
Matrix3c number_state_hamiltonian(const QuantizedParams& p, AtomLevel level, int m, int n);

// Positive eigenvalue of the block (the block spectrum is {-Omega, 0, +Omega}).
double rabi_frequency(const QuantizedParams& p, AtomLevel level, int m, int n);

// Photon indices of the three target states of a block, slot order (+, 0, -).
struct BlockTargets {
    std::array<int, 3> m{};
    std::array<int, 3> n{};
};
BlockTargets block_targets(Configuration config, AtomLevel level, int m, int n);

struct DressedBasisSolution {
    AtomLevel initial_level{AtomLevel::Lower};
    int m{0};
    int n{0};
    Eigen::Vector3d eigenvalues;  // (+Omega, 0, -Omega), the row order of transform
    Eigen::Vector3d euler_angles; // (theta1, theta2, theta3)
    Eigen::Matrix3d transform;    // orthogonal; rows are the dressed states
};

// Eigenvalues, mixing angles, and the orthogonal matrix diagonalizing the
// block: transform * H * transform^T = diag(+Omega, 0, -Omega). A fully
// degenerate block (all couplings zero) yields the identity transform with
// zero eigenvalues.
DressedBasisSolution euler_solution(const QuantizedParams& p, AtomLevel level, int m, int n);

// Orthogonal matrix built from the three mixing angles (zxz-type convention).
Eigen::Matrix3d euler_matrix(double theta1, double theta2, double theta3);

// The three amplitudes of a block at time t, tagged with their target photon
// indices; slot order (+, 0, -) as in the block basis.
struct AmplitudeTriple {
    struct Entry {
        Complex amp{0.0};
        int m{0};
        int n{0};
    };
    std::array<Entry, 3> slots{};

    double norm2() const;
    const Entry& to_upper() const { return slots[0]; }
    const Entry& to_middle() const { return slots[1]; }
    const Entry& to_lower() const { return slots[2]; }
};

// Closed-form amplitudes of exp(-i H t) applied to the initial slot.
AmplitudeTriple amplitudes_closed_form(const QuantizedParams& p, AtomLevel level,
                                       int m, int n, double t);

// Same amplitudes through the dressed-basis route
// transform^T diag(e^{-i lambda t}) transform; anti-typo oracle for the
// closed forms.
AmplitudeTriple amplitudes_spectral(const QuantizedParams& p, AtomLevel level,
                                    int m, int n, double t);

// Bichromatic coherent field, truncated per mode. The cascade uses alpha_n
// only; cutoff_m is then zero.
struct CoherentField {
    Complex alpha_m{0.0};
    Complex alpha_n{0.0};
    int cutoff_m{0};
    int cutoff_n{0};

    static int default_cutoff(double nbar);
    static CoherentField two_mode(Complex am, Complex an);
    static CoherentField two_mode(Complex am, Complex an, int cut_m, int cut_n);
    static CoherentField single_mode(Complex an);
    static CoherentField single_mode(Complex an, int cut_n);
};

// Poisson-coherent amplitudes C_k = e^{-|alpha|^2/2} alpha^k / sqrt(k!),
// k = 0..cutoff.
Eigen::VectorXcd coherent_amplitudes(Complex alpha, int cutoff);

// Atom-field amplitudes C^i_{m,n}(t) on the truncated mode grid; level index
// 0 = |+>, 1 = |0>, 2 = |->. The cascade stores a single row (m dimension 1).
struct EntangledState {
    Configuration config{Configuration::Lambda};
    double time{0.0};
    std::array<Eigen::MatrixXcd, 3> c;
    double norm_deficit{0.0};     // initial norm lost to the photon cutoff
    bool truncation_warning{false};

    double norm2() const;
};

// Evolves the factorized initial state atom0 (x) coherent field. atom0 must be
// normalized. A cutoff capturing less than 1 - 1e-6 of the initial norm sets
// truncation_warning rather than failing.
EntangledState entangled_amplitudes(const QuantizedParams& p, const AtomState& atom0,
                                    const CoherentField& field, double t);

} // namespace su3sim
