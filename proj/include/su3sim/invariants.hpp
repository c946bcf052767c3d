// invariants.hpp — exhaustive search for conserved quadratic Bloch-component sums.

#pragma once

#include <vector>

#include "su3sim/bloch.hpp"

namespace su3sim {

// Strictly increasing 1-based Bloch component indices.
struct InvariantSubset {
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    bool contains(int i) const;
    double sum_of_squares(const BlochVector& s) const;
};

bool operator==(const InvariantSubset& a, const InvariantSubset& b);

// All minimal subsets T of the requested sizes with m_ij = 0 for i in T, j
// outside T. Block decoupling of the antisymmetric generator is necessary and
// sufficient for sum_{i in T} s_i^2 to be conserved from every initial
// condition; unions of smaller decoupled subsets are not reported.
// Throws std::invalid_argument if m is not antisymmetric.
std::vector<InvariantSubset> conserved_subsets(const BlochMatrix& m,
                                               const std::vector<int>& sizes);

// Same search on the symbolic zero pattern of the configuration: an entry
// counts as zero only if it vanishes identically in the couplings/detunings,
// decided by intersecting the zero patterns of two random parameter draws
// that preserve which of kappa1/kappa2/delta1/delta2 are zero.
std::vector<InvariantSubset> conserved_subsets(const SemiclassicalParams& p,
                                               const std::vector<int>& sizes);

inline std::vector<int> default_subset_sizes() { return {3, 5}; }
inline std::vector<int> all_subset_sizes() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

// Integrates `trials` random pure-state Bloch vectors over t in
// [0, 100 / max(|kappa|, |delta|, eps)] implied by the magnitude of m and
// returns the maximum absolute drift of the subset sum from its initial value.
double verify_subset_drift(const BlochMatrix& m, const InvariantSubset& subset,
                           int trials, unsigned seed = 20230517u);

// Uniformly random pure-state Bloch vector (norm^2 = 4/3).
BlochVector random_pure_bloch(unsigned seed);

} // namespace su3sim
