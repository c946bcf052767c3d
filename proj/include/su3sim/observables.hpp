// observables.hpp — reduced atomic density matrix, von Neumann entropy, and
// population inversions of the entangled atom-field state.

#pragma once

#include <vector>

#include "su3sim/dressed.hpp"

namespace su3sim {

enum class EntropyBase { Nat, Two };

// rho_A[i][j] = sum_{m,n} C^i_{m,n} conj(C^j_{m,n}) in the (|+>, |0>, |->)
// ordering; Hermitian with trace equal to the state norm.
Matrix3c reduced_atomic_density(const EntangledState& s);

// -sum_k p_k log p_k over the eigenvalues, 0 log 0 := 0. Eigenvalues below
// -1e-10 are a validation error; the band [-1e-10, 0] clamps to zero.
double atomic_entropy(const Matrix3c& rho_a, EntropyBase base = EntropyBase::Nat);

struct Inversions {
    double w12{0.0}; // <T3>: upper vs middle
    double w23{0.0}; // <U3>: middle vs lower
    double w13{0.0}; // <V3>: upper vs lower
};

Inversions population_inversions(const EntangledState& s);
Inversions population_inversions(const Matrix3c& rho_a);

struct ObservableSeries {
    std::vector<double> times;
    std::vector<double> entropy;
    std::vector<double> w12;
    std::vector<double> w23;
    std::vector<double> w13;
    double norm_deficit{0.0};
    bool truncation_warning{false};

    std::size_t size() const { return times.size(); }
    const std::vector<double>& channel(int pair) const; // 12, 23, or 13
};

// Entangled amplitudes -> reduced density -> entropy and inversions on each
// grid point. The grid must be non-decreasing.
ObservableSeries simulate_observables(const QuantizedParams& p, const AtomState& atom0,
                                      const CoherentField& field,
                                      const std::vector<double>& grid,
                                      EntropyBase base = EntropyBase::Nat);

std::vector<double> uniform_grid(double t_max, int samples);

} // namespace su3sim
