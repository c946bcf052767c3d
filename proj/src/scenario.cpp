#include "su3sim/scenario.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "su3sim/invariants.hpp"
#include "su3sim/qutrit.hpp"

namespace su3sim {

namespace {

constexpr double kPi = 3.14159265358979323846;

RunMode parse_mode(const std::string& v) {
    if (v == "bloch") return RunMode::Bloch;
    if (v == "invariants") return RunMode::Invariants;
    if (v == "qutrit") return RunMode::Qutrit;
    if (v == "quantized") return RunMode::Quantized;
    if (v == "revival") return RunMode::Revival;
    throw ConfigError("unknown mode: " + v);
}

Configuration parse_configuration(const std::string& v) {
    if (v == "lambda") return Configuration::Lambda;
    if (v == "vee") return Configuration::Vee;
    if (v == "cascade") return Configuration::Cascade;
    throw ConfigError("unknown configuration: " + v);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + key + ": " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (i != x) {
        throw ConfigError("expected integer for " + key + ": " + v);
    }
    return i;
}

int parse_case(const std::string& v) {
    if (v == "I" || v == "1") return 1;
    if (v == "II" || v == "2") return 2;
    if (v == "III" || v == "3") return 3;
    throw ConfigError("case must be I, II, or III: " + v);
}

const char* case_name(int c) {
    return c == 1 ? "I" : (c == 2 ? "II" : "III");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    return out;
}

std::string subset_label(const InvariantSubset& subset) {
    std::string label;
    for (int i : subset.indices) {
        if (!label.empty()) {
            label += '+';
        }
        label += std::to_string(i);
    }
    return label;
}

} // namespace

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

AtomLevel case_level(int initial_case) {
    switch (initial_case) {
    case 1:
        return AtomLevel::Lower;
    case 2:
        return AtomLevel::Middle;
    case 3:
        return AtomLevel::Upper;
    default:
        throw ConfigError("case must be 1, 2, or 3");
    }
}

AtomState scenario_initial_atom(const ScenarioConfig& cfg) {
    if (cfg.amplitudes) {
        const auto& a = *cfg.amplitudes;
        AtomState atom{a[0], a[1], a[2]};
        const double norm = std::sqrt(atom.norm2());
        if (norm <= 0.0) {
            throw ConfigError("amplitudes must not all vanish");
        }
        atom.c_minus /= norm;
        atom.c_zero /= norm;
        atom.c_plus /= norm;
        return atom;
    }
    const int c = cfg.initial_case.value_or(1);
    switch (case_level(c)) {
    case AtomLevel::Lower:
        return AtomState::lower();
    case AtomLevel::Middle:
        return AtomState::middle();
    case AtomLevel::Upper:
        return AtomState::upper();
    }
    return AtomState::lower();
}

bool is_preset_name(const std::string& name) {
    return name == "fig2" || name == "fig3" || name == "fig4" || name == "fig5" ||
           name == "fig6" || name == "invariants";
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig cfg;
    if (name == "fig2" || name == "fig3") {
        cfg.mode = RunMode::Quantized;
        cfg.config = name == "fig2" ? Configuration::Lambda : Configuration::Vee;
        cfg.g1 = 0.2;
        cfg.g2 = 0.1;
        cfg.alpha_m = std::sqrt(30.0);
        cfg.alpha_n = std::sqrt(20.0);
        cfg.tmax = 400.0;
        cfg.samples = 4000;
        cfg.out = name + ".csv";
        return cfg;
    }
    if (name == "fig4" || name == "fig5" || name == "fig6") {
        cfg.mode = RunMode::Quantized;
        cfg.config = Configuration::Cascade;
        cfg.g1 = cfg.g2 = 0.1;
        cfg.alpha_n = std::sqrt(35.0);
        cfg.initial_case = name == "fig4" ? 1 : (name == "fig5" ? 2 : 3);
        cfg.tmax = 1200.0;
        cfg.samples = 12000;
        cfg.out = name + ".csv";
        return cfg;
    }
    if (name == "invariants") {
        cfg.mode = RunMode::Invariants;
        cfg.kappa1 = 1.0;
        cfg.kappa2 = 1.0;
        cfg.delta1 = 0.0;
        cfg.delta2 = 0.0;
        cfg.out = "invariants.csv";
        return cfg;
    }
    throw ConfigError("unknown preset: " + name);
}

void apply_key_value(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "mode") {
        cfg.mode = parse_mode(value);
    } else if (key == "config") {
        cfg.config = parse_configuration(value);
    } else if (key == "kappa1") {
        cfg.kappa1 = parse_double(key, value);
    } else if (key == "kappa2") {
        cfg.kappa2 = parse_double(key, value);
    } else if (key == "delta1") {
        cfg.delta1 = parse_double(key, value);
    } else if (key == "delta2") {
        cfg.delta2 = parse_double(key, value);
    } else if (key == "g1") {
        cfg.g1 = parse_double(key, value);
    } else if (key == "g2") {
        cfg.g2 = parse_double(key, value);
    } else if (key == "g") {
        cfg.g1 = cfg.g2 = parse_double(key, value);
    } else if (key == "alpha_m") {
        cfg.alpha_m = parse_double(key, value);
    } else if (key == "alpha_n") {
        cfg.alpha_n = parse_double(key, value);
    } else if (key == "nbar") {
        cfg.alpha_n = std::sqrt(parse_double(key, value));
    } else if (key == "cutoff") {
        cfg.cutoff = parse_int(key, value);
    } else if (key == "case") {
        cfg.initial_case = parse_case(value);
    } else if (key == "amplitudes") {
        std::array<double, 3> a{};
        std::istringstream in(value);
        std::string part;
        int idx = 0;
        while (std::getline(in, part, ',')) {
            if (idx >= 3) {
                throw ConfigError("amplitudes needs exactly three comma-separated values");
            }
            a[idx++] = parse_double(key, trim(part));
        }
        if (idx != 3) {
            throw ConfigError("amplitudes needs exactly three comma-separated values");
        }
        cfg.amplitudes = a;
    } else if (key == "theta0") {
        cfg.theta0 = parse_double(key, value);
    } else if (key == "theta1") {
        cfg.theta1 = parse_double(key, value);
    } else if (key == "theta2") {
        cfg.theta2 = parse_double(key, value);
    } else if (key == "phi") {
        cfg.phi = parse_double(key, value);
    } else if (key == "sizes") {
        if (value == "all") {
            cfg.sizes_all = true;
        } else if (value == "3,5") {
            cfg.sizes_all = false;
        } else {
            throw ConfigError("sizes must be '3,5' or 'all'");
        }
    } else if (key == "tmax") {
        cfg.tmax = parse_double(key, value);
        if (!(cfg.tmax >= 0.0)) {
            throw ConfigError("tmax must be >= 0");
        }
    } else if (key == "samples") {
        cfg.samples = parse_int(key, value);
        if (cfg.samples < 1) {
            throw ConfigError("samples must be >= 1");
        }
    } else if (key == "base") {
        if (value == "e") {
            cfg.base = EntropyBase::Nat;
        } else if (value == "2") {
            cfg.base = EntropyBase::Two;
        } else {
            throw ConfigError("base must be 'e' or '2'");
        }
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "preset") {
        ScenarioConfig p = preset(value);
        p.out = cfg.out.empty() ? p.out : cfg.out;
        cfg = p;
    } else {
        throw ConfigError("unknown configuration key: " + key);
    }
}

void apply_config_file(ScenarioConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file: " + path);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void emit_plot_data(const ObservableSeries& series, const std::string& path) {
    if (series.size() == 0) {
        throw std::invalid_argument("emit_plot_data: series is empty");
    }
    std::ofstream out = open_output(path);
    out << "t,entropy,w12,w23,w13\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << csv_number(series.times[i]) << ',' << csv_number(series.entropy[i]) << ','
            << csv_number(series.w12[i]) << ',' << csv_number(series.w23[i]) << ','
            << csv_number(series.w13[i]) << '\n';
    }
    if (!out) {
        throw IoError("failed writing " + path);
    }
}

namespace {

CoherentField scenario_field(const ScenarioConfig& cfg) {
    if (cfg.config == Configuration::Cascade) {
        return cfg.cutoff ? CoherentField::single_mode(cfg.alpha_n, *cfg.cutoff)
                          : CoherentField::single_mode(cfg.alpha_n);
    }
    if (cfg.cutoff) {
        return CoherentField::two_mode(cfg.alpha_m, cfg.alpha_n, *cfg.cutoff, *cfg.cutoff);
    }
    return CoherentField::two_mode(cfg.alpha_m, cfg.alpha_n);
}

void note_warnings(const ObservableSeries& series, const std::string& path, RunResult& result) {
    if (!series.truncation_warning) {
        return;
    }
    const std::string meta = path + ".meta";
    std::ofstream out = open_output(meta);
    out << "truncation_warning=1\n";
    out << "norm_deficit=" << csv_number(series.norm_deficit) << "\n";
    result.files.push_back(meta);
    result.warnings.push_back("truncation: initial norm deficit " +
                              csv_number(series.norm_deficit) + " at cutoff");
}

void run_bloch(const ScenarioConfig& cfg, RunResult& result) {
    const SemiclassicalParams params{cfg.config, cfg.kappa1, cfg.kappa2, cfg.delta1, cfg.delta2};
    const BlochMatrix m = bloch_matrix(params);
    const auto sizes = cfg.sizes_all ? all_subset_sizes() : default_subset_sizes();
    const auto subsets = conserved_subsets(params, sizes);
    const AtomState atom = scenario_initial_atom(cfg);
    const BlochVector s0 = bloch_from_density(atom.density());

    std::ofstream out = open_output(cfg.out);
    out << "t";
    for (int i = 1; i <= 8; ++i) {
        out << ",s" << i;
    }
    for (const auto& subset : subsets) {
        std::string label = subset_label(subset);
        std::replace(label.begin(), label.end(), '+', '_');
        out << ",q_" << label;
    }
    out << "\n";

    const std::vector<double> grid = uniform_grid(cfg.tmax, cfg.samples);
    const double dt = cfg.samples > 1 ? grid[1] - grid[0] : 0.0;
    const BlochMatrix step = (m * dt).exp();
    BlochVector s = s0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            s = step * s;
        }
        out << csv_number(grid[i]);
        for (int k = 0; k < 8; ++k) {
            out << ',' << csv_number(s(k));
        }
        for (const auto& subset : subsets) {
            out << ',' << csv_number(subset.sum_of_squares(s));
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("failed writing " + cfg.out);
    }
    result.files.push_back(cfg.out);
}

void run_invariants(const ScenarioConfig& cfg, RunResult& result) {
    std::ofstream out = open_output(cfg.out);
    out << "config,subset,size\n";
    const auto sizes = cfg.sizes_all ? all_subset_sizes() : default_subset_sizes();
    for (Configuration c :
         {Configuration::Lambda, Configuration::Vee, Configuration::Cascade}) {
        const SemiclassicalParams params{c, cfg.kappa1, cfg.kappa2, cfg.delta1, cfg.delta2};
        for (const auto& subset : conserved_subsets(params, sizes)) {
            out << configuration_name(c) << ',' << subset_label(subset) << ','
                << subset.size() << "\n";
        }
    }
    if (!out) {
        throw IoError("failed writing " + cfg.out);
    }
    result.files.push_back(cfg.out);
}

void run_qutrit(const ScenarioConfig& cfg, RunResult& result) {
    QutritAngles angles(cfg.theta0, cfg.theta1, cfg.theta2, cfg.phi);
    const AtomState psi = qutrit_wavefunction(angles);
    const BlochVector s = bloch_from_density(qutrit_density(angles));

    std::ofstream out = open_output(cfg.out);
    out << "theta0,theta1,theta2,phi,c_minus_re,c_minus_im,c_zero_re,c_zero_im,"
           "c_plus_re,c_plus_im";
    for (int i = 1; i <= 8; ++i) {
        out << ",s" << i;
    }
    out << ",bloch_norm\n";
    out << csv_number(angles.theta0) << ',' << csv_number(angles.theta1) << ','
        << csv_number(angles.theta2) << ',' << csv_number(angles.phi);
    for (const Complex& c : {psi.c_minus, psi.c_zero, psi.c_plus}) {
        out << ',' << csv_number(c.real()) << ',' << csv_number(c.imag());
    }
    for (int k = 0; k < 8; ++k) {
        out << ',' << csv_number(s(k));
    }
    out << ',' << csv_number(qutrit_bloch_norm(angles)) << "\n";
    if (!out) {
        throw IoError("failed writing " + cfg.out);
    }
    result.files.push_back(cfg.out);
}

std::string with_case_suffix(const std::string& path, int initial_case) {
    const auto dot = path.rfind('.');
    const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
    const std::string ext = dot == std::string::npos ? ".csv" : path.substr(dot);
    return stem + "_case" + case_name(initial_case) + ext;
}

void run_quantized_single(const ScenarioConfig& cfg, const std::string& path,
                          RunResult& result) {
    const QuantizedParams params(cfg.config, cfg.g1, cfg.g2);
    const CoherentField field = scenario_field(cfg);
    const ObservableSeries series =
        simulate_observables(params, scenario_initial_atom(cfg), field,
                             uniform_grid(cfg.tmax, cfg.samples), cfg.base);
    emit_plot_data(series, path);
    result.files.push_back(path);
    note_warnings(series, path, result);
}

void run_quantized(const ScenarioConfig& cfg, RunResult& result) {
    if (cfg.initial_case || cfg.amplitudes) {
        run_quantized_single(cfg, cfg.out, result);
        return;
    }
    // No initial condition selected: emit all three reference cases.
    for (int c : {1, 2, 3}) {
        ScenarioConfig one = cfg;
        one.initial_case = c;
        run_quantized_single(one, with_case_suffix(cfg.out, c), result);
    }
}

void run_revival(const ScenarioConfig& cfg, RunResult& result) {
    if (cfg.config != Configuration::Cascade) {
        throw ConfigError("revival mode requires config=cascade");
    }
    const double nbar = std::norm(Complex{cfg.alpha_n, 0.0});
    const double g = cfg.g1;
    const AtomLevel level = case_level(cfg.initial_case.value_or(1));
    const RevivalEstimate predicted = collapse_revival_times(level, nbar, g);

    ScenarioConfig sim = cfg;
    if (sim.tmax < 1.2 * predicted.t_revival_1) {
        sim.tmax = 1.3 * predicted.t_revival_1;
        sim.samples = std::max(sim.samples, static_cast<int>(sim.tmax / 0.1));
    }
    const QuantizedParams params(cfg.config, cfg.g1, cfg.g2);
    const ObservableSeries series =
        simulate_observables(params, scenario_initial_atom(sim), scenario_field(sim),
                             uniform_grid(sim.tmax, sim.samples), cfg.base);

    const double rabi_period = 2.0 * kPi / (g * std::sqrt(2.0 * nbar));
    std::ofstream out = open_output(cfg.out);
    out << "channel,predicted_collapse_1,predicted_collapse_2,predicted_revival_1,"
           "predicted_revival_2,measured_collapse,measured_revival_1,measured_revival_2\n";
    for (int pair : {12, 23, 13}) {
        const EnvelopeExtraction measured =
            extract_revival_times(series.times, series.channel(pair), 5.0 * rabi_period);
        out << 'w' << pair << ',' << csv_number(predicted.t_collapse_1) << ','
            << csv_number(predicted.t_collapse_2) << ',' << csv_number(predicted.t_revival_1)
            << ',' << csv_number(predicted.t_revival_2) << ','
            << csv_number(measured.collapse_time);
        for (std::size_t k = 0; k < 2; ++k) {
            out << ',';
            if (k < measured.revival_times.size()) {
                out << csv_number(measured.revival_times[k]);
            } else {
                out << "nan";
            }
        }
        out << "\n";
    }
    if (!out) {
        throw IoError("failed writing " + cfg.out);
    }
    result.files.push_back(cfg.out);
    note_warnings(series, cfg.out, result);
}

} // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    ScenarioConfig run = cfg;
    if (run.out.empty()) {
        run.out = "out.csv";
    }
    RunResult result;
    switch (run.mode) {
    case RunMode::Bloch:
        run_bloch(run, result);
        break;
    case RunMode::Invariants:
        run_invariants(run, result);
        break;
    case RunMode::Qutrit:
        run_qutrit(run, result);
        break;
    case RunMode::Quantized:
        run_quantized(run, result);
        break;
    case RunMode::Revival:
        run_revival(run, result);
        break;
    }
    return result;
}

} // namespace su3sim
