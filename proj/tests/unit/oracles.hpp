// Test-only oracles kept independent of the library's evolution paths.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace su3sim::testing {

// Adaptive Cash-Karp RK45 for ds/dt = M s. Deliberately shares nothing with
// evolve_bloch (no matrix exponential).
template <typename Matrix, typename Vector>
Vector integrate_linear(const Matrix& m, Vector s, double t_end, double tol = 1e-12) {
    auto deriv = [&m](const Vector& v) { return Vector(m * v); };
    double t = 0.0;
    double h = t_end > 0.0 ? std::min(0.1, t_end) : 0.0;
    int guard = 0;
    while (t < t_end && guard++ < 2000000) {
        h = std::min(h, t_end - t);
        const Vector k1 = deriv(s);
        const Vector k2 = deriv(Vector(s + h * (k1 / 5.0)));
        const Vector k3 = deriv(Vector(s + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2)));
        const Vector k4 =
            deriv(Vector(s + h * (3.0 / 10.0 * k1 - 9.0 / 10.0 * k2 + 6.0 / 5.0 * k3)));
        const Vector k5 = deriv(Vector(s + h * (-11.0 / 54.0 * k1 + 5.0 / 2.0 * k2 -
                                                70.0 / 27.0 * k3 + 35.0 / 27.0 * k4)));
        const Vector k6 = deriv(Vector(
            s + h * (1631.0 / 55296.0 * k1 + 175.0 / 512.0 * k2 + 575.0 / 13824.0 * k3 +
                     44275.0 / 110592.0 * k4 + 253.0 / 4096.0 * k5)));
        const Vector s5 = s + h * (37.0 / 378.0 * k1 + 250.0 / 621.0 * k3 + 125.0 / 594.0 * k4 +
                                   512.0 / 1771.0 * k6);
        const Vector s4 =
            s + h * (2825.0 / 27648.0 * k1 + 18575.0 / 48384.0 * k3 + 13525.0 / 55296.0 * k4 +
                     277.0 / 14336.0 * k5 + 1.0 / 4.0 * k6);
        const double err = (s5 - s4).norm();
        const double scale = tol * std::max(1.0, s.norm());
        if (err <= scale || h < 1e-12) {
            t += h;
            s = s5;
        }
        const double factor =
            err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 2.0;
        h *= std::clamp(factor, 0.2, 2.0);
    }
    return s;
}

inline std::mt19937 seeded_rng(unsigned seed) { return std::mt19937(seed); }

} // namespace su3sim::testing
