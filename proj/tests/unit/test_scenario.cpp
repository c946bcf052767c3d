#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "su3sim/scenario.hpp"

using namespace su3sim;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("su3sim_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("csv numbers use 12 significant digits") {
    CHECK(csv_number(1.0) == "1");
    CHECK(csv_number(4.0 / 3.0) == "1.33333333333");
    CHECK(csv_number(-0.000123456789012345) == "-0.000123456789012");
}

TEST_CASE("presets carry the reference parameters") {
    const ScenarioConfig fig2 = preset("fig2");
    CHECK(fig2.config == Configuration::Lambda);
    CHECK(fig2.g1 == 0.2);
    CHECK(fig2.g2 == 0.1);
    CHECK(fig2.alpha_m == doctest::Approx(std::sqrt(30.0)));
    CHECK(fig2.alpha_n == doctest::Approx(std::sqrt(20.0)));
    CHECK(fig2.tmax == 400.0);
    CHECK(fig2.samples == 4000);
    CHECK_FALSE(fig2.initial_case.has_value());

    const ScenarioConfig fig3 = preset("fig3");
    CHECK(fig3.config == Configuration::Vee);

    for (const char* name : {"fig4", "fig5", "fig6"}) {
        const ScenarioConfig cfg = preset(name);
        CHECK(cfg.config == Configuration::Cascade);
        CHECK(cfg.g1 == 0.1);
        CHECK(cfg.alpha_n == doctest::Approx(std::sqrt(35.0)));
        CHECK(cfg.tmax == 1200.0);
        CHECK(cfg.samples == 12000);
        REQUIRE(cfg.initial_case.has_value());
    }
    CHECK(*preset("fig4").initial_case == 1);
    CHECK(*preset("fig5").initial_case == 2);
    CHECK(*preset("fig6").initial_case == 3);

    CHECK_THROWS_AS(preset("fig7"), ConfigError);
}

TEST_CASE("key=value parsing") {
    ScenarioConfig cfg;
    apply_key_value(cfg, "mode", "bloch");
    CHECK(cfg.mode == RunMode::Bloch);
    apply_key_value(cfg, "config", "cascade");
    CHECK(cfg.config == Configuration::Cascade);
    apply_key_value(cfg, "kappa1", "0.25");
    CHECK(cfg.kappa1 == 0.25);
    apply_key_value(cfg, "case", "II");
    CHECK(cfg.initial_case == 2);
    apply_key_value(cfg, "nbar", "35");
    CHECK(cfg.alpha_n == doctest::Approx(std::sqrt(35.0)));
    apply_key_value(cfg, "base", "2");
    CHECK(cfg.base == EntropyBase::Two);
    apply_key_value(cfg, "amplitudes", "0.6, 0.8, 0");
    REQUIRE(cfg.amplitudes.has_value());
    CHECK((*cfg.amplitudes)[1] == 0.8);

    CHECK_THROWS_AS(apply_key_value(cfg, "mode", "wibble"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "does_not_exist", "1"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "samples", "0"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "g1", "abc"), ConfigError);
    CHECK_THROWS_AS(apply_key_value(cfg, "case", "IV"), ConfigError);
}

TEST_CASE("config files parse with comments and blank lines") {
    TempDir dir;
    const std::string path = dir.file("scenario.cfg");
    {
        std::ofstream out(path);
        out << "# cascade revival scenario\n";
        out << "mode = quantized\n\n";
        out << "config = cascade\n";
        out << "g = 0.1   # shared coupling\n";
        out << "nbar = 35\n";
        out << "case = I\n";
    }
    ScenarioConfig cfg;
    apply_config_file(cfg, path);
    CHECK(cfg.mode == RunMode::Quantized);
    CHECK(cfg.config == Configuration::Cascade);
    CHECK(cfg.g1 == 0.1);
    CHECK(cfg.g2 == 0.1);
    CHECK(cfg.initial_case == 1);

    const std::string bad = dir.file("bad.cfg");
    {
        std::ofstream out(bad);
        out << "mode quantized\n";
    }
    ScenarioConfig cfg2;
    CHECK_THROWS_AS(apply_config_file(cfg2, bad), ConfigError);
    CHECK_THROWS_AS(apply_config_file(cfg2, dir.file("missing.cfg")), ConfigError);
}

TEST_CASE("emit_plot_data format and determinism") {
    TempDir dir;
    ObservableSeries series;
    series.times = {0.0, 0.5, 1.0};
    series.entropy = {0.0, 0.3, 0.6};
    series.w12 = {1.0, 0.5, 0.25};
    series.w23 = {-1.0, -0.5, -0.25};
    series.w13 = {0.0, 0.1, 0.2};

    const std::string path = dir.file("series.csv");
    emit_plot_data(series, path);
    const std::string contents = slurp(path);
    CHECK(contents == "t,entropy,w12,w23,w13\n"
                      "0,0,1,-1,0\n"
                      "0.5,0.3,0.5,-0.5,0.1\n"
                      "1,0.6,0.25,-0.25,0.2\n");

    const std::string again = dir.file("series2.csv");
    emit_plot_data(series, again);
    CHECK(slurp(again) == contents);

    ObservableSeries empty;
    const std::string missing = dir.file("never.csv");
    CHECK_THROWS_AS(emit_plot_data(empty, missing), std::invalid_argument);
    CHECK_FALSE(fs::exists(missing));

    CHECK_THROWS_AS(emit_plot_data(series, dir.file("no_dir/x.csv")), IoError);
}

TEST_CASE("bloch scenario writes the expected columns and conserves sectors") {
    TempDir dir;
    ScenarioConfig cfg;
    cfg.mode = RunMode::Bloch;
    cfg.config = Configuration::Lambda;
    cfg.kappa1 = 1.0;
    cfg.kappa2 = 0.5;
    cfg.delta1 = 0.0;
    cfg.delta2 = 0.0;
    cfg.initial_case = 1;
    cfg.tmax = 10.0;
    cfg.samples = 101;
    cfg.out = dir.file("bloch.csv");

    const RunResult result = run_scenario(cfg);
    CHECK(result.exit_code == 0);
    REQUIRE(result.files.size() == 1);

    std::ifstream in(cfg.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,s1,s2,s3,s4,s5,s6,s7,s8,q_1_4_7,q_2_3_5_6_8");

    // sector sums stay put across the whole series
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto last_comma = line.rfind(',');
        const auto prev_comma = line.rfind(',', last_comma - 1);
        const double q5 = std::stod(line.substr(last_comma + 1));
        const double q3 = std::stod(line.substr(prev_comma + 1, last_comma - prev_comma - 1));
        CHECK(q3 == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
        CHECK(q5 == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    }
    CHECK(rows == 101);
}

TEST_CASE("invariants scenario lists the subset pairs") {
    TempDir dir;
    ScenarioConfig cfg = preset("invariants");
    cfg.out = dir.file("inv.csv");
    run_scenario(cfg);
    CHECK(slurp(cfg.out) == "config,subset,size\n"
                            "lambda,1+4+7,3\n"
                            "lambda,2+3+5+6+8,5\n"
                            "vee,1+3+5+7+8,5\n"
                            "vee,2+4+6,3\n"
                            "cascade,1+5+6,3\n"
                            "cascade,2+3+4+7+8,5\n");
}

TEST_CASE("qutrit scenario emits one row") {
    TempDir dir;
    ScenarioConfig cfg;
    cfg.mode = RunMode::Qutrit;
    cfg.theta0 = 1.0;
    cfg.theta1 = 0.5;
    cfg.theta2 = 0.25;
    cfg.phi = 0.75;
    cfg.out = dir.file("qutrit.csv");
    run_scenario(cfg);
    const std::string contents = slurp(cfg.out);
    CHECK(contents.find("bloch_norm") != std::string::npos);
    const auto lines = std::count(contents.begin(), contents.end(), '\n');
    CHECK(lines == 2);
    CHECK(contents.substr(contents.rfind(',') + 1) == "1.33333333333\n");
}

TEST_CASE("quantized scenario is deterministic and spawns cases when unset") {
    TempDir dir;
    ScenarioConfig cfg;
    cfg.mode = RunMode::Quantized;
    cfg.config = Configuration::Cascade;
    cfg.g1 = cfg.g2 = 0.1;
    cfg.alpha_n = std::sqrt(4.0);
    cfg.tmax = 5.0;
    cfg.samples = 11;
    cfg.out = dir.file("q.csv");

    SUBCASE("explicit case") {
        cfg.initial_case = 2;
        const RunResult r1 = run_scenario(cfg);
        REQUIRE(r1.files.size() == 1);
        const std::string first = slurp(cfg.out);
        run_scenario(cfg);
        CHECK(slurp(cfg.out) == first);
        CHECK(first.substr(0, 24) == "t,entropy,w12,w23,w13\n0,");
        const std::string first_row = first.substr(22, first.find('\n', 22) - 22);
        const double entropy0 = std::stod(first_row.substr(2));
        CHECK(entropy0 <= 1e-10);
    }
    SUBCASE("all three cases when unset") {
        const RunResult r = run_scenario(cfg);
        REQUIRE(r.files.size() == 3);
        CHECK(fs::exists(dir.file("q_caseI.csv")));
        CHECK(fs::exists(dir.file("q_caseII.csv")));
        CHECK(fs::exists(dir.file("q_caseIII.csv")));
    }
}

TEST_CASE("revival scenario reports predictions next to measurements") {
    TempDir dir;
    ScenarioConfig cfg;
    cfg.mode = RunMode::Revival;
    cfg.config = Configuration::Cascade;
    cfg.g1 = cfg.g2 = 0.1;
    apply_key_value(cfg, "nbar", "20");
    cfg.initial_case = 2;
    cfg.samples = 2;  // forced up by the revival runner
    cfg.tmax = 1.0;
    cfg.out = dir.file("revival.csv");
    run_scenario(cfg);
    std::ifstream in(cfg.out);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "channel,predicted_collapse_1,predicted_collapse_2,predicted_revival_1,"
          "predicted_revival_2,measured_collapse,measured_revival_1,measured_revival_2");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
    }
    CHECK(rows == 3);

    ScenarioConfig bad = cfg;
    bad.config = Configuration::Lambda;
    CHECK_THROWS_AS(run_scenario(bad), ConfigError);
}
