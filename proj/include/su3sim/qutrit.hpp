// qutrit.hpp — four-parameter qutrit wavefunction and its Bloch-sphere image.

#pragma once

#include "su3sim/su3.hpp"

namespace su3sim {

// theta0, theta1, theta2 in [0, pi], enforced on construction; phi is
// normalized into [0, 2*pi).
struct QutritAngles {
    double theta0;
    double theta1;
    double theta2;
    double phi;

    QutritAngles(double t0, double t1, double t2, double p);
};

// |q> = cos(theta0/2) |->
//      + sin(theta0/2) sin(theta1/2) sin(theta2/2) e^{i phi} |0>
//      + sin(theta0/2) (cos(theta1/2) + i sin(theta1/2) cos(theta2/2)) |+>
AtomState qutrit_wavefunction(const QutritAngles& a);

// Pure-state density |q><q| in the (|+>, |0>, |->) matrix basis.
Matrix3c qutrit_density(const QutritAngles& a);

// sum_i Tr(rho lambda_i)^2; identically 4/3 for every angle choice.
double qutrit_bloch_norm(const QutritAngles& a);

// theta1 = theta2 = pi collapses the |+> amplitude, leaving a qubit in
// span{|->, |0>}. Throws std::invalid_argument otherwise.
AtomState qubit_reduction(const QutritAngles& a);

} // namespace su3sim
