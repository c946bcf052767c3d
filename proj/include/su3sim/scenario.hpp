// scenario.hpp — scenario configuration, presets, and CSV emission for the CLI.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su3sim/observables.hpp"
#include "su3sim/revival.hpp"

namespace su3sim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode { Bloch, Invariants, Qutrit, Quantized, Revival };

struct ScenarioConfig {
    RunMode mode{RunMode::Quantized};
    Configuration config{Configuration::Lambda};

    // semiclassical drive
    double kappa1{1.0};
    double kappa2{1.0};
    double delta1{0.0};
    double delta2{0.0};

    // quantized couplings and field
    double g1{0.1};
    double g2{0.1};
    double alpha_m{0.0};
    double alpha_n{0.0};
    std::optional<int> cutoff;

    // initial condition: case I/II/III (lower/middle/upper) or explicit
    // real amplitudes on (|->, |0>, |+>)
    std::optional<int> initial_case;
    std::optional<std::array<double, 3>> amplitudes;

    // qutrit coordinates
    double theta0{0.0};
    double theta1{0.0};
    double theta2{0.0};
    double phi{0.0};

    // invariant search tuple sizes; empty means the {3, 5} default
    bool sizes_all{false};

    double tmax{400.0};
    int samples{4000};
    EntropyBase base{EntropyBase::Nat};
    std::string out;
};

// Named parameter sets reproducing the reference scenarios fig2..fig6.
ScenarioConfig preset(const std::string& name);
bool is_preset_name(const std::string& name);

// One key=value assignment; throws ConfigError for unknown keys or bad values.
void apply_key_value(ScenarioConfig& cfg, const std::string& key, const std::string& value);

// Flat key=value file: blank lines and '#' comments ignored.
void apply_config_file(ScenarioConfig& cfg, const std::string& path);

struct RunResult {
    int exit_code{0};
    std::vector<std::string> files;
    std::vector<std::string> warnings;
};

// Executes the configured scenario and writes its CSV output (plus a .meta
// sidecar when warnings arise). Throws ConfigError / IoError on failure.
RunResult run_scenario(const ScenarioConfig& cfg);

// CSV with fixed columns (t, entropy, w12, w23, w13), 12 significant digits,
// LF line endings. An empty series is an error and creates no file.
void emit_plot_data(const ObservableSeries& series, const std::string& path);

// 12-significant-digit number formatting shared by all CSV writers.
std::string csv_number(double v);

AtomState scenario_initial_atom(const ScenarioConfig& cfg);
AtomLevel case_level(int initial_case);

} // namespace su3sim
