#include "su3sim/dressed.hpp"

#include <cmath>
#include <stdexcept>

namespace su3sim {

namespace {

const Complex kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

// Couplings of the 3x3 block. Meaning per configuration:
//   lambda:  (1,2) = b, (1,3) = a   (common level |+>)
//   vee:     (1,3) = a, (2,3) = b   (common level |->)
//   cascade: (1,2) = p, (2,3) = q   (chain + - 0 - -), a = p, b = q
struct BlockCouplings {
    double a{0.0};
    double b{0.0};
    double omega() const { return std::hypot(a, b); }
};

void check_photon_domain(Configuration config, AtomLevel level, int m, int n) {
    if (m < 0 || n < 0) {
        throw std::domain_error("number_state_hamiltonian: photon counts must be >= 0");
    }
    bool ok = true;
    switch (config) {
    case Configuration::Lambda:
        if (level == AtomLevel::Lower) ok = m >= 1;
        if (level == AtomLevel::Middle) ok = n >= 1;
        break;
    case Configuration::Vee:
        if (level == AtomLevel::Lower) ok = m >= 1 && n >= 1;
        if (level == AtomLevel::Middle) ok = m >= 1;
        if (level == AtomLevel::Upper) ok = n >= 1;
        break;
    case Configuration::Cascade:
        if (level == AtomLevel::Lower) ok = n >= 2;
        if (level == AtomLevel::Middle) ok = n >= 1;
        break;
    }
    if (!ok) {
        throw std::domain_error("number_state_hamiltonian: photon counts unreachable from the "
                                "selection rules of the chosen initial level");
    }
}

BlockCouplings block_couplings(const QuantizedParams& p, AtomLevel level, int m, int n) {
    BlockCouplings c;
    switch (p.config) {
    case Configuration::Lambda:
        switch (level) {
        case AtomLevel::Lower:
            c = {p.g1 * std::sqrt(double(m)), p.g2 * std::sqrt(double(n + 1))};
            break;
        case AtomLevel::Middle:
            c = {p.g1 * std::sqrt(double(m + 1)), p.g2 * std::sqrt(double(n))};
            break;
        case AtomLevel::Upper:
            c = {p.g1 * std::sqrt(double(m + 1)), p.g2 * std::sqrt(double(n + 1))};
            break;
        }
        break;
    case Configuration::Vee:
        switch (level) {
        case AtomLevel::Lower:
            c = {p.g1 * std::sqrt(double(m)), p.g2 * std::sqrt(double(n))};
            break;
        case AtomLevel::Middle:
            c = {p.g1 * std::sqrt(double(m)), p.g2 * std::sqrt(double(n + 1))};
            break;
        case AtomLevel::Upper:
            c = {p.g1 * std::sqrt(double(m + 1)), p.g2 * std::sqrt(double(n))};
            break;
        }
        break;
    case Configuration::Cascade:
        switch (level) {
        case AtomLevel::Lower:
            c = {p.g() * std::sqrt(double(n - 1)), p.g() * std::sqrt(double(n))};
            break;
        case AtomLevel::Middle:
            c = {p.g() * std::sqrt(double(n)), p.g() * std::sqrt(double(n + 1))};
            break;
        case AtomLevel::Upper:
            c = {p.g() * std::sqrt(double(n + 1)), p.g() * std::sqrt(double(n + 2))};
            break;
        }
        break;
    }
    return c;
}

Eigen::Matrix3d block_matrix_real(Configuration config, const BlockCouplings& c) {
    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    switch (config) {
    case Configuration::Lambda:
        h(0, 1) = h(1, 0) = c.b;
        h(0, 2) = h(2, 0) = c.a;
        break;
    case Configuration::Vee:
        h(0, 2) = h(2, 0) = c.a;
        h(1, 2) = h(2, 1) = c.b;
        break;
    case Configuration::Cascade:
        h(0, 1) = h(1, 0) = c.a;
        h(1, 2) = h(2, 1) = c.b;
        break;
    }
    return h;
}

// Mixing angles in the closed forms conventional for each block family. The
// orthogonal transform itself is assembled from the analytic eigenvectors.
Eigen::Vector3d mixing_angles(const QuantizedParams& p, AtomLevel level, int m, int n,
                              const BlockCouplings& c) {
    const double omega = c.omega();
    if (omega == 0.0) {
        return Eigen::Vector3d::Zero();
    }
    Eigen::Vector3d th;
    switch (p.config) {
    case Configuration::Lambda: {
        const double nb2 = c.b * c.b; // g2^2 * (photon factor)
        th(0) = std::acos(c.a / (omega * std::sqrt(2.0)));
        th(1) = -std::acos(-c.b / std::sqrt(omega * omega + nb2));
        th(2) = std::acos(-std::sqrt(2.0) * c.b / std::sqrt(omega * omega + nb2));
        break;
    }
    case Configuration::Vee:
        th(0) = -kPi / 4.0;
        th(1) = std::acos(-c.b / omega);
        th(2) = -kPi / 2.0;
        break;
    case Configuration::Cascade: {
        const int nn = n;
        double t1 = 0.0, t2 = 0.0, t3 = 0.0;
        switch (level) {
        case AtomLevel::Lower:
            t1 = -std::acos(std::sqrt(nn / (4.0 * nn - 2.0)));
            t2 = -std::acos(-std::sqrt((2.0 * nn - 1.0) / (3.0 * nn - 1.0)));
            t3 = -std::acos(-std::sqrt((2.0 * nn - 2.0) / (3.0 * nn - 2.0)));
            break;
        case AtomLevel::Middle:
            t1 = -std::acos(std::sqrt((nn + 1.0) / (4.0 * nn + 2.0)));
            t2 = -std::acos(-std::sqrt((2.0 * nn + 1.0) / (3.0 * nn + 1.0)));
            t3 = -std::acos(-std::sqrt(2.0 * nn / (3.0 * nn + 1.0)));
            break;
        case AtomLevel::Upper:
            t1 = -std::acos(std::sqrt((nn + 2.0) / (4.0 * nn + 6.0)));
            t2 = -std::acos(-std::sqrt((2.0 * nn + 3.0) / (3.0 * nn + 4.0)));
            t3 = -std::acos(-std::sqrt((2.0 * nn + 2.0) / (3.0 * nn + 4.0)));
            break;
        }
        th << t1, t2, t3;
        break;
    }
    }
    return th;
}

Eigen::Matrix3d dressed_transform(Configuration config, const BlockCouplings& c) {
    const double omega = c.omega();
    if (omega == 0.0) {
        return Eigen::Matrix3d::Identity();
    }
    const double s2 = std::sqrt(2.0);
    const double a = c.a / omega;
    const double b = c.b / omega;
    Eigen::Matrix3d t;
    switch (config) {
    case Configuration::Lambda:
        t << 1.0 / s2, b / s2, a / s2,
             0.0, a, -b,
             -1.0 / s2, b / s2, a / s2;
        break;
    case Configuration::Vee:
        t << a / s2, b / s2, 1.0 / s2,
             b, -a, 0.0,
             a / s2, b / s2, -1.0 / s2;
        break;
    case Configuration::Cascade:
        t << a / s2, 1.0 / s2, b / s2,
             b, 0.0, -a,
             a / s2, -1.0 / s2, b / s2;
        break;
    }
    return t;
}

} // namespace

const char* level_name(AtomLevel level) {
    switch (level) {
    case AtomLevel::Lower:
        return "lower";
    case AtomLevel::Middle:
        return "middle";
    case AtomLevel::Upper:
        return "upper";
    }
    return "?";
}

int level_slot(AtomLevel level) {
    switch (level) {
    case AtomLevel::Upper:
        return 0;
    case AtomLevel::Middle:
        return 1;
    case AtomLevel::Lower:
        return 2;
    }
    return 2;
}

QuantizedParams::QuantizedParams(Configuration c, double g1_, double g2_)
    : config(c), g1(g1_), g2(g2_) {
    if (c == Configuration::Cascade && g1_ != g2_) {
        throw std::invalid_argument("QuantizedParams: the equidistant cascade requires g1 == g2");
    }
}

Matrix3c number_state_hamiltonian(const QuantizedParams& p, AtomLevel level, int m, int n) {
    check_photon_domain(p.config, level, m, n);
    return block_matrix_real(p.config, block_couplings(p, level, m, n)).cast<Complex>();
}

double rabi_frequency(const QuantizedParams& p, AtomLevel level, int m, int n) {
    check_photon_domain(p.config, level, m, n);
    return block_couplings(p, level, m, n).omega();
}

BlockTargets block_targets(Configuration config, AtomLevel level, int m, int n) {
    BlockTargets t;
    switch (config) {
    case Configuration::Lambda:
        switch (level) {
        case AtomLevel::Lower:
            t.m = {m - 1, m - 1, m};
            t.n = {n, n + 1, n};
            break;
        case AtomLevel::Middle:
            t.m = {m, m, m + 1};
            t.n = {n - 1, n, n - 1};
            break;
        case AtomLevel::Upper:
            t.m = {m, m, m + 1};
            t.n = {n, n + 1, n};
            break;
        }
        break;
    case Configuration::Vee:
        switch (level) {
        case AtomLevel::Lower:
            t.m = {m - 1, m, m};
            t.n = {n, n - 1, n};
            break;
        case AtomLevel::Middle:
            t.m = {m - 1, m, m};
            t.n = {n + 1, n, n + 1};
            break;
        case AtomLevel::Upper:
            t.m = {m, m + 1, m + 1};
            t.n = {n, n - 1, n};
            break;
        }
        break;
    case Configuration::Cascade:
        switch (level) {
        case AtomLevel::Lower:
            t.m = {0, 0, 0};
            t.n = {n - 2, n - 1, n};
            break;
        case AtomLevel::Middle:
            t.m = {0, 0, 0};
            t.n = {n - 1, n, n + 1};
            break;
        case AtomLevel::Upper:
            t.m = {0, 0, 0};
            t.n = {n, n + 1, n + 2};
            break;
        }
        break;
    }
    return t;
}

DressedBasisSolution euler_solution(const QuantizedParams& p, AtomLevel level, int m, int n) {
    check_photon_domain(p.config, level, m, n);
    const BlockCouplings c = block_couplings(p, level, m, n);
    const double omega = c.omega();
    DressedBasisSolution sol;
    sol.initial_level = level;
    sol.m = m;
    sol.n = n;
    sol.eigenvalues = Eigen::Vector3d(omega, 0.0, -omega);
    sol.euler_angles = mixing_angles(p, level, m, n, c);
    sol.transform = dressed_transform(p.config, c);
    return sol;
}

Eigen::Matrix3d euler_matrix(double theta1, double theta2, double theta3) {
    const double c1 = std::cos(theta1), s1 = std::sin(theta1);
    const double c2 = std::cos(theta2), s2 = std::sin(theta2);
    const double c3 = std::cos(theta3), s3 = std::sin(theta3);
    Eigen::Matrix3d a;
    a << c1 * c2 - c3 * s2 * s1, c1 * s2 + c3 * c2 * s1, s1 * s3,
        -s1 * c2 - c3 * s2 * c1, -s1 * s2 + c3 * c2 * c1, c1 * s3,
        s3 * s2, -s3 * c2, c3;
    return a;
}

double AmplitudeTriple::norm2() const {
    double sum = 0.0;
    for (const Entry& e : slots) {
        sum += std::norm(e.amp);
    }
    return sum;
}

namespace {

AmplitudeTriple tagged_triple(Configuration config, AtomLevel level, int m, int n) {
    AmplitudeTriple triple;
    const BlockTargets targets = block_targets(config, level, m, n);
    for (int s = 0; s < 3; ++s) {
        triple.slots[s].m = targets.m[s];
        triple.slots[s].n = targets.n[s];
    }
    return triple;
}

} // namespace

AmplitudeTriple amplitudes_closed_form(const QuantizedParams& p, AtomLevel level,
                                       int m, int n, double t) {
    check_photon_domain(p.config, level, m, n);
    AmplitudeTriple triple = tagged_triple(p.config, level, m, n);
    const BlockCouplings c = block_couplings(p, level, m, n);
    const double a = c.a;
    const double b = c.b;
    const double omega = c.omega();
    const int init = level_slot(level);
    if (omega == 0.0) {
        triple.slots[init].amp = 1.0;
        return triple;
    }
    const double w2 = omega * omega;
    const double cs = std::cos(omega * t);
    const Complex isn = -kI * std::sin(omega * t);

    auto& amp = triple.slots;
    switch (p.config) {
    case Configuration::Lambda:
        switch (level) {
        case AtomLevel::Lower:
            amp[0].amp = isn * a / omega;
            amp[1].amp = a * b * (cs - 1.0) / w2;
            amp[2].amp = (b * b + a * a * cs) / w2;
            break;
        case AtomLevel::Middle:
            amp[0].amp = isn * b / omega;
            amp[1].amp = (a * a + b * b * cs) / w2;
            amp[2].amp = a * b * (cs - 1.0) / w2;
            break;
        case AtomLevel::Upper:
            amp[0].amp = cs;
            amp[1].amp = isn * b / omega;
            amp[2].amp = isn * a / omega;
            break;
        }
        break;
    case Configuration::Vee:
        switch (level) {
        case AtomLevel::Lower:
            amp[0].amp = isn * a / omega;
            amp[1].amp = isn * b / omega;
            amp[2].amp = cs;
            break;
        case AtomLevel::Middle:
            amp[0].amp = a * b * (cs - 1.0) / w2;
            amp[1].amp = (a * a + b * b * cs) / w2;
            amp[2].amp = isn * b / omega;
            break;
        case AtomLevel::Upper:
            amp[0].amp = (b * b + a * a * cs) / w2;
            amp[1].amp = a * b * (cs - 1.0) / w2;
            amp[2].amp = isn * a / omega;
            break;
        }
        break;
    case Configuration::Cascade:
        switch (level) {
        case AtomLevel::Lower:
            amp[0].amp = a * b * (cs - 1.0) / w2;
            amp[1].amp = isn * b / omega;
            amp[2].amp = (a * a + b * b * cs) / w2;
            break;
        case AtomLevel::Middle:
            amp[0].amp = isn * a / omega;
            amp[1].amp = cs;
            amp[2].amp = isn * b / omega;
            break;
        case AtomLevel::Upper:
            amp[0].amp = (b * b + a * a * cs) / w2;
            amp[1].amp = isn * a / omega;
            amp[2].amp = a * b * (cs - 1.0) / w2;
            break;
        }
        break;
    }
    return triple;
}

AmplitudeTriple amplitudes_spectral(const QuantizedParams& p, AtomLevel level,
                                    int m, int n, double t) {
    const DressedBasisSolution sol = euler_solution(p, level, m, n);
    AmplitudeTriple triple = tagged_triple(p.config, level, m, n);
    Eigen::Vector3cd phases;
    for (int k = 0; k < 3; ++k) {
        phases(k) = std::exp(-kI * sol.eigenvalues(k) * t);
    }
    const Eigen::Matrix3cd u = sol.transform.transpose().cast<Complex>() *
                               phases.asDiagonal() *
                               sol.transform.cast<Complex>();
    const Eigen::Vector3cd amps = u.col(level_slot(level));
    for (int s = 0; s < 3; ++s) {
        triple.slots[s].amp = amps(s);
    }
    return triple;
}

int CoherentField::default_cutoff(double nbar) {
    const int cut = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar)));
    return std::max(cut, 8);
}

CoherentField CoherentField::two_mode(Complex am, Complex an) {
    return two_mode(am, an, default_cutoff(std::norm(am)), default_cutoff(std::norm(an)));
}

CoherentField CoherentField::two_mode(Complex am, Complex an, int cut_m, int cut_n) {
    CoherentField f;
    f.alpha_m = am;
    f.alpha_n = an;
    f.cutoff_m = cut_m;
    f.cutoff_n = cut_n;
    return f;
}

CoherentField CoherentField::single_mode(Complex an) {
    return single_mode(an, default_cutoff(std::norm(an)));
}

CoherentField CoherentField::single_mode(Complex an, int cut_n) {
    CoherentField f;
    f.alpha_n = an;
    f.cutoff_m = 0;
    f.cutoff_n = cut_n;
    return f;
}

Eigen::VectorXcd coherent_amplitudes(Complex alpha, int cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("coherent_amplitudes: cutoff must be >= 0");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    const double nbar = std::norm(alpha);
    if (nbar == 0.0) {
        c(0) = 1.0;
        return c;
    }
    const double log_mag = std::log(std::abs(alpha));
    const double arg = std::arg(alpha);
    for (int k = 0; k <= cutoff; ++k) {
        const double mag = std::exp(-0.5 * nbar + k * log_mag - 0.5 * std::lgamma(k + 1.0));
        c(k) = std::polar(mag, k * arg);
    }
    return c;
}

double EntangledState::norm2() const {
    double sum = 0.0;
    for (const auto& level : c) {
        sum += level.squaredNorm();
    }
    return sum;
}

EntangledState entangled_amplitudes(const QuantizedParams& p, const AtomState& atom0,
                                    const CoherentField& field, double t) {
    if (std::abs(atom0.norm2() - 1.0) > 1e-9) {
        throw std::invalid_argument("entangled_amplitudes: atomic state must be normalized");
    }

    const bool cascade = p.config == Configuration::Cascade;
    const int mc = cascade ? 0 : field.cutoff_m;
    const int nc = field.cutoff_n;
    const Eigen::VectorXcd cm =
        cascade ? Eigen::VectorXcd::Ones(1) : coherent_amplitudes(field.alpha_m, mc);
    const Eigen::VectorXcd cn = coherent_amplitudes(field.alpha_n, nc);

    auto cm_at = [&](int k) -> Complex { return (k >= 0 && k <= mc) ? cm(k) : Complex{0.0}; };
    auto cn_at = [&](int k) -> Complex { return (k >= 0 && k <= nc) ? cn(k) : Complex{0.0}; };

    EntangledState state;
    state.config = p.config;
    state.time = t;
    const int rows = cascade ? 1 : mc + 2;
    const int cols = cascade ? nc + 3 : nc + 2;
    for (auto& level : state.c) {
        level = Eigen::MatrixXcd::Zero(rows, cols);
    }

    double captured = 0.0;

    // Every reachable 3-dimensional invariant subspace is visited once,
    // anchored at its lower-level member; unreachable slots carry zero weight
    // and zero coupling, so the degenerate boundary blocks evolve trivially.
    auto evolve_triple = [&](AtomLevel anchor, int m, int n) {
        const BlockCouplings bc = block_couplings(p, anchor, m, n);
        const BlockTargets targets = block_targets(p.config, anchor, m, n);
        Eigen::Vector3cd w;
        const Complex atom_amp[3] = {atom0.c_plus, atom0.c_zero, atom0.c_minus};
        for (int s = 0; s < 3; ++s) {
            w(s) = atom_amp[s] * cm_at(cascade ? 0 : targets.m[s]) * cn_at(targets.n[s]);
        }
        const double w2 = w.squaredNorm();
        captured += w2;
        if (w2 == 0.0) {
            return;
        }
        const double omega = bc.omega();
        Eigen::Vector3cd amps = w;
        if (omega > 0.0) {
            const Eigen::Matrix3d h = block_matrix_real(p.config, bc);
            const Eigen::Vector3cd hw = h.cast<Complex>() * w;
            const Eigen::Vector3cd hhw = h.cast<Complex>() * hw;
            amps += (std::cos(omega * t) - 1.0) / (omega * omega) * hhw -
                    kI * std::sin(omega * t) / omega * hw;
        }
        for (int s = 0; s < 3; ++s) {
            const int tm = cascade ? 0 : targets.m[s];
            const int tn = targets.n[s];
            if (tm >= 0 && tn >= 0) {
                state.c[s](tm, tn) += amps(s);
            }
        }
    };

    if (cascade) {
        // Cascade lower-anchored triples need n >= 1 so the couplings are
        // well-formed; n = 0 is the frozen vacuum-side state.
        state.c[2](0, 0) += atom0.c_minus * cn_at(0);
        captured += std::norm(atom0.c_minus * cn_at(0));
        for (int n = 1; n <= nc + 2; ++n) {
            evolve_triple(AtomLevel::Lower, 0, n);
        }
    } else if (p.config == Configuration::Lambda) {
        // The n = 0 middle-level states are stationary: their only allowed
        // transition would require absorbing from an empty mode, and they sit
        // in no lower-anchored subspace.
        for (int m = 0; m <= mc; ++m) {
            state.c[1](m, 0) += atom0.c_zero * cm_at(m) * cn_at(0);
            captured += std::norm(atom0.c_zero * cm_at(m) * cn_at(0));
        }
        for (int m = 0; m <= mc + 1; ++m) {
            for (int n = 0; n <= nc; ++n) {
                evolve_triple(AtomLevel::Lower, m, n);
            }
        }
    } else {
        for (int m = 0; m <= mc + 1; ++m) {
            for (int n = 0; n <= nc + 1; ++n) {
                evolve_triple(AtomLevel::Lower, m, n);
            }
        }
    }

    state.norm_deficit = std::max(0.0, 1.0 - captured);
    state.truncation_warning = state.norm_deficit > 1e-6;
    return state;
}

} // namespace su3sim
