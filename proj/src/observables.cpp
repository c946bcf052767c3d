#include "su3sim/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace su3sim {

Matrix3c reduced_atomic_density(const EntangledState& s) {
    Matrix3c rho = Matrix3c::Zero();
    const Eigen::Index rows = s.c[0].rows();
    const Eigen::Index cols = s.c[0].cols();
    for (Eigen::Index m = 0; m < rows; ++m) {
        for (Eigen::Index n = 0; n < cols; ++n) {
            for (int i = 0; i < 3; ++i) {
                const Complex ci = s.c[i](m, n);
                if (ci == Complex{0.0}) {
                    continue;
                }
                for (int j = 0; j < 3; ++j) {
                    rho(i, j) += ci * std::conj(s.c[j](m, n));
                }
            }
        }
    }
    return rho;
}

double atomic_entropy(const Matrix3c& rho_a, EntropyBase base) {
    if ((rho_a - rho_a.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("atomic_entropy: density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix3c> solver(rho_a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("atomic_entropy: eigendecomposition failed");
    }
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
        double p = solver.eigenvalues()(k);
        if (p < -1e-10) {
            throw std::invalid_argument("atomic_entropy: density matrix has a negative eigenvalue");
        }
        // Roundoff band [-1e-10, 0] clamps to zero; likewise just above one.
        p = std::min(std::max(p, 0.0), 1.0);
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    if (base == EntropyBase::Two) {
        s /= std::log(2.0);
    }
    return s;
}

Inversions population_inversions(const Matrix3c& rho_a) {
    Inversions w;
    const double p_up = rho_a(0, 0).real();
    const double p_mid = rho_a(1, 1).real();
    const double p_low = rho_a(2, 2).real();
    w.w12 = p_up - p_mid;
    w.w23 = p_mid - p_low;
    w.w13 = p_up - p_low;
    return w;
}

Inversions population_inversions(const EntangledState& s) {
    return population_inversions(reduced_atomic_density(s));
}

const std::vector<double>& ObservableSeries::channel(int pair) const {
    switch (pair) {
    case 12:
        return w12;
    case 23:
        return w23;
    case 13:
        return w13;
    default:
        throw std::invalid_argument("ObservableSeries::channel: pair must be 12, 23, or 13");
    }
}

ObservableSeries simulate_observables(const QuantizedParams& p, const AtomState& atom0,
                                      const CoherentField& field,
                                      const std::vector<double>& grid, EntropyBase base) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] < grid[i - 1]) {
            throw std::invalid_argument("simulate_observables: time grid must be non-decreasing");
        }
    }
    ObservableSeries series;
    series.times = grid;
    series.entropy.reserve(grid.size());
    series.w12.reserve(grid.size());
    series.w23.reserve(grid.size());
    series.w13.reserve(grid.size());
    for (double t : grid) {
        const EntangledState state = entangled_amplitudes(p, atom0, field, t);
        const Matrix3c rho = reduced_atomic_density(state);
        series.entropy.push_back(atomic_entropy(rho, base));
        const Inversions w = population_inversions(rho);
        series.w12.push_back(w.w12);
        series.w23.push_back(w.w23);
        series.w13.push_back(w.w13);
        if (t == grid.front()) {
            series.norm_deficit = state.norm_deficit;
            series.truncation_warning = state.truncation_warning;
        }
    }
    return series;
}

std::vector<double> uniform_grid(double t_max, int samples) {
    if (samples < 1 || t_max < 0.0) {
        throw std::invalid_argument("uniform_grid: need samples >= 1 and t_max >= 0");
    }
    std::vector<double> grid(samples);
    for (int i = 0; i < samples; ++i) {
        grid[i] = samples == 1 ? 0.0 : t_max * i / (samples - 1);
    }
    return grid;
}

} // namespace su3sim
