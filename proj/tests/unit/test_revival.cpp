#include <doctest.h>

#include <cmath>

#include "su3sim/revival.hpp"

using namespace su3sim;

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

TEST_CASE("linearized Rabi coefficients") {
    SUBCASE("lower case at nbar = 35") {
        const LinearRabi r = rabi_expansion(35.0, 0.1, AtomLevel::Lower);
        CHECK(r(10.0) == doctest::Approx(0.1 * (10.0 + 34.0) / std::sqrt(69.0)).epsilon(1e-13));
    }
    SUBCASE("middle case at nbar = 35") {
        const LinearRabi r = rabi_expansion(35.0, 0.1, AtomLevel::Middle);
        CHECK(r(10.0) == doctest::Approx(0.1 * (10.0 + 36.0) / std::sqrt(71.0)).epsilon(1e-13));
    }
    SUBCASE("expansion is exact at nbar for the lower case") {
        const double nbar = 35.0, g = 0.1;
        const LinearRabi r = rabi_expansion(nbar, g, AtomLevel::Lower);
        const double exact = g * std::sqrt(2.0 * nbar - 1.0);
        CHECK(std::abs(r(nbar) - exact) / exact <= 0.01);
    }
    SUBCASE("nbar below one is rejected") {
        CHECK_THROWS_AS(rabi_expansion(0.5, 0.1, AtomLevel::Lower), std::invalid_argument);
    }
}

TEST_CASE("analytic envelope reference points") {
    SUBCASE("lower case at t = 0 sums the printed constants") {
        const Inversions w = analytic_envelope(AtomLevel::Lower, 35.0, 0.1, 0.0);
        CHECK(w.w12 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(w.w13 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("middle case at t = 0 matches the direct value") {
        const Inversions w = analytic_envelope(AtomLevel::Middle, 35.0, 0.1, 0.0);
        CHECK(w.w12 == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(w.w23 == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("envelope factor returns to one at the revival time") {
        const double nbar = 35.0, g = 0.1;
        const double tr = 2.0 * kPi * std::sqrt(2.0 * nbar - 1.0) / g;
        CHECK(envelope_factor(AtomLevel::Lower, nbar, g, tr) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(envelope_factor(AtomLevel::Lower, nbar, g, tr / 2.0, 2) ==
              doctest::Approx(1.0).epsilon(1e-9));
        CHECK(envelope_factor(AtomLevel::Lower, nbar, g, tr / 2.0) < 1e-10);
    }
    SUBCASE("envelope periodicity") {
        for (AtomLevel level : {AtomLevel::Lower, AtomLevel::Middle, AtomLevel::Upper}) {
            const double nbar = 20.0, g = 0.3;
            const double b = level == AtomLevel::Lower ? -1.0
                              : level == AtomLevel::Middle ? 1.0 : 3.0;
            const double period = 2.0 * kPi * std::sqrt(2.0 * nbar + b) / g;
            for (double t : {1.0, 7.7, 40.0}) {
                CHECK(envelope_factor(level, nbar, g, t + period) ==
                      doctest::Approx(envelope_factor(level, nbar, g, t)).epsilon(1e-9));
            }
        }
    }
    SUBCASE("the upper-case exponent flag switches variants") {
        const double t = 13.0;
        const Inversions patterned = analytic_envelope(AtomLevel::Upper, 35.0, 0.1, t, true);
        const Inversions printed = analytic_envelope(AtomLevel::Upper, 35.0, 0.1, t, false);
        CHECK(patterned.w12 != printed.w12);
        CHECK(patterned.w13 == doctest::Approx(printed.w13).epsilon(1e-12));
    }
}

TEST_CASE("collapse and revival time formulas") {
    SUBCASE("large nbar limits") {
        const RevivalEstimate est = collapse_revival_times(AtomLevel::Lower, 5000.0, 0.2);
        CHECK(est.t_collapse_1 == doctest::Approx(2.0 / 0.2).epsilon(0.01));
        CHECK(est.t_collapse_2 == doctest::Approx(1.0 / 0.2).epsilon(0.01));
    }
    SUBCASE("lower case at nbar = 35, g = 0.1") {
        const RevivalEstimate est = collapse_revival_times(AtomLevel::Lower, 35.0, 0.1);
        CHECK(est.t_revival_1 == doctest::Approx(2.0 * kPi * std::sqrt(69.0) / 0.1).epsilon(1e-12));
        CHECK(est.t_revival_1 == doctest::Approx(521.9).epsilon(1e-3));
        CHECK(est.t_revival_2 == doctest::Approx(est.t_revival_1 / 2.0).epsilon(1e-14));
        CHECK(est.t_collapse_2 == doctest::Approx(est.t_collapse_1 / 2.0).epsilon(1e-14));
    }
    SUBCASE("middle case carries a single pair") {
        const RevivalEstimate est = collapse_revival_times(AtomLevel::Middle, 35.0, 0.1);
        CHECK(est.t_revival_1 == doctest::Approx(2.0 * kPi * std::sqrt(71.0) / 0.1).epsilon(1e-12));
        CHECK(est.t_revival_1 == doctest::Approx(529.5).epsilon(1e-3));
        CHECK(std::isnan(est.t_revival_2));
        CHECK(std::isnan(est.t_collapse_2));
    }
    SUBCASE("halving identities for the upper case") {
        const RevivalEstimate est = collapse_revival_times(AtomLevel::Upper, 42.0, 0.7);
        CHECK(est.t_revival_2 == doctest::Approx(est.t_revival_1 / 2.0).epsilon(1e-14));
        CHECK(est.t_collapse_2 == doctest::Approx(est.t_collapse_1 / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("envelope extraction on a synthetic collapse-revival signal") {
    const double tau = 8.0;
    const double omega = 6.0;
    const double revival_at = 120.0;
    const double t_max = 200.0;
    const int samples = 20000;
    std::vector<double> times(samples), w(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = t_max * i / (samples - 1);
        times[i] = t;
        const double primary = std::exp(-(t / tau) * (t / tau));
        const double d = t - revival_at;
        const double mirrored = std::exp(-(d / tau) * (d / tau));
        w[i] = (primary + mirrored) * std::cos(omega * t);
    }
    const double window = 5.0 * 2.0 * kPi / omega;
    const EnvelopeExtraction ext = extract_revival_times(times, w, window);

    // amplitude 1/sqrt(2) from the RMS of the carrier
    CHECK(ext.initial_amplitude == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.1));
    // envelope falls below 10% near tau * sqrt(ln 100) = 2.146 tau
    const double expected_collapse = tau * std::sqrt(std::log(100.0));
    CHECK(ext.collapse_time == doctest::Approx(expected_collapse).epsilon(0.35));
    REQUIRE(ext.revival_times.size() >= 1);
    CHECK(ext.revival_times.front() ==
          doctest::Approx(revival_at).epsilon(2.0 * window / revival_at));
}

TEST_CASE("extraction flags a signal that never collapses") {
    std::vector<double> times(4000), w(4000);
    for (int i = 0; i < 4000; ++i) {
        times[i] = 0.05 * i;
        w[i] = std::cos(3.0 * times[i]);
    }
    const EnvelopeExtraction ext = extract_revival_times(times, w, 10.0);
    CHECK(std::isnan(ext.collapse_time));
    CHECK(ext.revival_times.empty());
}

TEST_CASE("measured cascade revivals match the predictions across nbar") {
    const double g = 0.1;
    for (double nbar : {20.0, 35.0, 50.0}) {
        const QuantizedParams p(Configuration::Cascade, g, g);
        const CoherentField field = CoherentField::single_mode(std::sqrt(nbar));
        const double rabi_period = 2.0 * kPi / (g * std::sqrt(2.0 * nbar));

        SUBCASE(("case I w13, nbar = " + std::to_string(int(nbar))).c_str()) {
            const RevivalEstimate predicted = collapse_revival_times(AtomLevel::Lower, nbar, g);
            const ObservableSeries series = simulate_observables(
                p, AtomState::lower(), field,
                uniform_grid(1.25 * predicted.t_revival_1,
                             static_cast<int>(1.25 * predicted.t_revival_1 / 0.25)));
            const EnvelopeExtraction ext =
                extract_revival_times(series.times, series.w13, 5.0 * rabi_period);
            REQUIRE(ext.revival_times.size() >= 1);
            CHECK(std::abs(ext.revival_times.front() - predicted.t_revival_1) /
                      predicted.t_revival_1 <=
                  0.10);
        }
        SUBCASE(("case II w23, nbar = " + std::to_string(int(nbar))).c_str()) {
            const RevivalEstimate predicted = collapse_revival_times(AtomLevel::Middle, nbar, g);
            const ObservableSeries series = simulate_observables(
                p, AtomState::middle(), field,
                uniform_grid(1.25 * predicted.t_revival_1,
                             static_cast<int>(1.25 * predicted.t_revival_1 / 0.25)));
            const EnvelopeExtraction ext =
                extract_revival_times(series.times, series.w23, 5.0 * rabi_period);
            bool within = false;
            for (double tr : ext.revival_times) {
                if (std::abs(tr - predicted.t_revival_1) / predicted.t_revival_1 <= 0.10) {
                    within = true;
                }
            }
            CHECK(within);
        }
    }
}

TEST_CASE("two-mode rephasing estimate") {
    // dominant mode rephases first: 4 pi Omega / g1^2
    const double est = two_mode_revival_estimate(0.2, 0.1, 30.0, 20.0);
    const double omega_bar = std::sqrt(0.04 * 30.0 + 0.01 * 20.0);
    CHECK(est == doctest::Approx(4.0 * kPi * omega_bar / 0.04).epsilon(1e-12));
}
