// revival.hpp — high-field analytic envelopes of the equidistant cascade and
// numeric extraction of collapse and revival timescales.

#pragma once

#include <vector>

#include "su3sim/observables.hpp"

namespace su3sim {

// Linearized Rabi frequency Omega(n) ~= slope * n + offset around nbar.
struct LinearRabi {
    double slope{0.0};
    double offset{0.0};
    double operator()(double n) const { return slope * n + offset; }
};

// Expansion coefficients per initial-level case; nbar >= 1.
LinearRabi rabi_expansion(double nbar, double g, AtomLevel level);

// Primary exponential envelope factor
// exp(-nbar (1 - cos(harmonic * g t / sqrt(2 nbar + b)))) with
// b = -1 / +1 / +3 for lower / middle / upper.
double envelope_factor(AtomLevel level, double nbar, double g, double t, int harmonic = 1);

// High-field closed-form inversion envelopes for the three cases, transcribed
// verbatim. The upper-level case carries two published exponent variants; the
// flag selects the lower-case-patterned one (default) or the verbatim print.
Inversions analytic_envelope(AtomLevel level, double nbar, double g, double t,
                             bool patterned_exponent = true);

// Collapse and revival times per case. The middle case has a single pair; its
// secondary entries are NaN.
struct RevivalEstimate {
    AtomLevel level{AtomLevel::Lower};
    double nbar{0.0};
    double g{0.0};
    double t_collapse_1{0.0};
    double t_collapse_2{0.0};
    double t_revival_1{0.0};
    double t_revival_2{0.0};
};

RevivalEstimate collapse_revival_times(AtomLevel level, double nbar, double g);

// Sliding-window RMS envelope detection on a uniformly sampled inversion
// signal. `window` is the smoothing length in time units (about five Rabi
// periods works well). Collapse is the first drop of the envelope below
// collapse_frac of the initial amplitude; revivals are later envelope peaks
// above revival_frac of it. collapse_time is NaN when no collapse occurs and
// the revival list may be empty.
struct EnvelopeExtraction {
    double initial_amplitude{0.0};
    double collapse_time{0.0};
    std::vector<double> revival_times;
};

EnvelopeExtraction extract_revival_times(const std::vector<double>& times,
                                         const std::vector<double>& w, double window,
                                         double collapse_frac = 0.1,
                                         double revival_frac = 0.2);

// First rephasing time of a bichromatic system: the smaller of the per-mode
// linearized comb periods 4 pi Omega_bar / g_p^2. Used to place the collapse
// plateau window for the two-mode configurations.
double two_mode_revival_estimate(double g1, double g2, double nbar_m, double nbar_n);

} // namespace su3sim
