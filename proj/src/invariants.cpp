#include "su3sim/invariants.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace su3sim {

namespace {

// Zero pattern as a bit per (i, j) pair, i, j in [0, 8).
using Pattern = std::array<std::array<bool, 8>, 8>;

Pattern nonzero_pattern(const BlochMatrix& m) {
    Pattern p{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            p[i][j] = m(i, j) != 0.0;
        }
    }
    return p;
}

std::vector<InvariantSubset> subsets_from_pattern(const Pattern& coupled,
                                                  const std::vector<int>& sizes) {
    // A subset decouples iff no entry connects it to its complement. Scanning
    // all 2^8 - 2 proper subsets plus the full set keeps the criterion literal.
    std::vector<unsigned> decoupled;
    for (unsigned mask = 1; mask < 256; ++mask) {
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i) {
            if (!(mask & (1u << i))) {
                continue;
            }
            for (int j = 0; j < 8; ++j) {
                if (!(mask & (1u << j)) && coupled[i][j]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            decoupled.push_back(mask);
        }
    }
    // Keep only minimal subsets: drop any decoupled set that strictly contains
    // another decoupled set.
    std::vector<InvariantSubset> result;
    for (unsigned mask : decoupled) {
        bool minimal = true;
        for (unsigned other : decoupled) {
            if (other != mask && (other & mask) == other) {
                minimal = false;
                break;
            }
        }
        if (!minimal) {
            continue;
        }
        const int count = __builtin_popcount(mask);
        if (std::find(sizes.begin(), sizes.end(), count) == sizes.end()) {
            continue;
        }
        InvariantSubset s;
        for (int i = 0; i < 8; ++i) {
            if (mask & (1u << i)) {
                s.indices.push_back(i + 1);
            }
        }
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end(),
              [](const InvariantSubset& a, const InvariantSubset& b) {
                  return a.indices < b.indices;
              });
    return result;
}

void require_antisymmetric(const BlochMatrix& m) {
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("conserved_subsets: matrix must be antisymmetric");
    }
}

} // namespace

bool InvariantSubset::contains(int i) const {
    return std::find(indices.begin(), indices.end(), i) != indices.end();
}

double InvariantSubset::sum_of_squares(const BlochVector& s) const {
    double sum = 0.0;
    for (int i : indices) {
        sum += s(i - 1) * s(i - 1);
    }
    return sum;
}

bool operator==(const InvariantSubset& a, const InvariantSubset& b) {
    return a.indices == b.indices;
}

std::vector<InvariantSubset> conserved_subsets(const BlochMatrix& m,
                                               const std::vector<int>& sizes) {
    require_antisymmetric(m);
    return subsets_from_pattern(nonzero_pattern(m), sizes);
}

std::vector<InvariantSubset> conserved_subsets(const SemiclassicalParams& p,
                                               const std::vector<int>& sizes) {
    std::mt19937 rng(0x5eedu);
    std::uniform_real_distribution<double> mag(0.25, 4.0);
    Pattern coupled{};
    for (int draw = 0; draw < 2; ++draw) {
        SemiclassicalParams q = p;
        auto redraw = [&](double v) { return v == 0.0 ? 0.0 : mag(rng); };
        q.kappa1 = redraw(p.kappa1);
        q.kappa2 = redraw(p.kappa2);
        q.delta1 = redraw(p.delta1);
        q.delta2 = redraw(p.delta2);
        const Pattern pat = nonzero_pattern(bloch_matrix(q));
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                coupled[i][j] = coupled[i][j] || pat[i][j];
            }
        }
    }
    return subsets_from_pattern(coupled, sizes);
}

BlochVector random_pure_bloch(unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector3cd psi;
    for (int i = 0; i < 3; ++i) {
        psi(i) = Complex{gauss(rng), gauss(rng)};
    }
    psi.normalize();
    const Matrix3c rho = psi * psi.adjoint();
    return bloch_from_density(rho);
}

double verify_subset_drift(const BlochMatrix& m, const InvariantSubset& subset,
                           int trials, unsigned seed) {
    if (trials < 1) {
        throw std::invalid_argument("verify_subset_drift: trials must be >= 1");
    }
    require_antisymmetric(m);
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-3);
    const double t_max = 100.0 / scale;
    const int steps = 200;
    // One-step propagator; repeated application walks the sample grid.
    const BlochMatrix step = (m * (t_max / steps)).exp();
    double max_drift = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const BlochVector s0 = random_pure_bloch(seed + 977u * static_cast<unsigned>(trial));
        const double ref = subset.sum_of_squares(s0);
        BlochVector st = s0;
        for (int k = 1; k <= steps; ++k) {
            st = step * st;
            max_drift = std::max(max_drift, std::abs(subset.sum_of_squares(st) - ref));
        }
    }
    return max_drift;
}

} // namespace su3sim
