#include "su3sim/qutrit.hpp"

#include <cmath>
#include <stdexcept>

namespace su3sim {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_phase(double phi) {
    double p = std::fmod(phi, 2.0 * kPi);
    if (p < 0.0) {
        p += 2.0 * kPi;
    }
    return p;
}

} // namespace

QutritAngles::QutritAngles(double t0, double t1, double t2, double p)
    : theta0(t0), theta1(t1), theta2(t2), phi(wrap_phase(p)) {
    for (double theta : {t0, t1, t2}) {
        if (!(theta >= 0.0 && theta <= kPi)) {
            throw std::invalid_argument("QutritAngles: theta angles must lie in [0, pi]");
        }
    }
}

AtomState qutrit_wavefunction(const QutritAngles& a) {
    const double c0 = std::cos(a.theta0 / 2.0);
    const double s0 = std::sin(a.theta0 / 2.0);
    const double c1 = std::cos(a.theta1 / 2.0);
    const double s1 = std::sin(a.theta1 / 2.0);
    const double c2 = std::cos(a.theta2 / 2.0);
    const double s2 = std::sin(a.theta2 / 2.0);
    AtomState psi;
    psi.c_minus = c0;
    psi.c_zero = s0 * s1 * s2 * std::exp(Complex{0.0, a.phi});
    psi.c_plus = Complex{s0 * c1, s0 * s1 * c2};
    return psi;
}

Matrix3c qutrit_density(const QutritAngles& a) {
    return qutrit_wavefunction(a).density();
}

double qutrit_bloch_norm(const QutritAngles& a) {
    const Matrix3c rho = qutrit_density(a);
    double sum = 0.0;
    for (int i = 1; i <= 8; ++i) {
        const double s = (rho * gell_mann(i)).trace().real();
        sum += s * s;
    }
    return sum;
}

AtomState qubit_reduction(const QutritAngles& a) {
    if (std::abs(a.theta1 - kPi) > 1e-12 || std::abs(a.theta2 - kPi) > 1e-12) {
        throw std::invalid_argument("qubit_reduction: requires theta1 = theta2 = pi");
    }
    return qutrit_wavefunction(a);
}

} // namespace su3sim
