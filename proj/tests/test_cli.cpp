#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using dcq::testing::dcq_binary;
using dcq::testing::run_command;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "dcq-cli-scratch" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body) {
    fs::path path = dir / name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string half_third_config(const fs::path& out_dir, const std::string& toll = R"({"kind":"impulse","j":0})") {
    return std::string(R"({
  "branches": [{"b": 1.0, "p": "1/2"}, {"b": 1.0, "p": "1/3"}],
  "toll": )") + toll + R"(,
  "horizon": 100000,
  "truncation": 32,
  "replicas": 4,
  "seed": 11,
  "output": {"dir": ")" + out_dir.string() + R"(", "formats": ["json", "csv"]}
})";
}

json read_report(const fs::path& out_dir) {
    std::ifstream in(out_dir / "report.json");
    REQUIRE(in.good());
    return json::parse(in);
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("solve: prints the exponent, writes a consistent report, exit 0") {
    fs::path dir = scratch_dir("solve");
    fs::path config = write_file(dir, "config.json", half_third_config(dir / "out"));
    auto result = run_command(dcq_binary() + " solve --config " + config.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("0.78788491102586") != std::string::npos);
    CHECK(result.output.find("irrationality hypothesis") == std::string::npos);

    json report = read_report(dir / "out");
    CHECK(report.at("exponent").at("s0").get<double>() ==
          doctest::Approx(dcq::testing::kS0_HalfThird).epsilon(1e-12));
    CHECK(report.at("regime").at("s0_gt_1").get<bool>() == false);
    CHECK(report.at("tool").at("name").get<std::string>() == "dcq");
}

TEST_CASE("solve: config echo re-parses to an identical AnalysisConfig") {
    fs::path dir = scratch_dir("echo");
    std::string raw = R"({
  "branches": [{"b": 1.5, "p": "0.35"}, {"b": 0.75, "p": "1/3"}],
  "toll": {"kind": "driver", "variant": "geometric-convolution", "q": 0.25},
  "horizon": 5000,
  "truncation": 12,
  "replicas": 7,
  "seed": 99,
  "tolerances": {"root_tol": 1e-12, "report_tol": 1e-8},
  "envelope": {"c": 2.0, "eta": 0.25},
  "mgf_t": [0.05, 0.1],
  "checkpoint_factor": 4.0,
  "output": {"dir": ")" + (dir / "out").string() + R"(", "formats": ["json"]}
})";
    fs::path config = write_file(dir, "config.json", raw);
    auto result = run_command(dcq_binary() + " solve --config " + config.string());
    REQUIRE(result.exit_code == 0);

    dcq::cli::AnalysisConfig original = dcq::cli::load_config_file(config.string());
    json echo = read_report(dir / "out").at("config");
    dcq::cli::AnalysisConfig reparsed = dcq::cli::config_from_json(echo);
    CHECK(original == reparsed);
    // and the echo of the echo is textually stable
    CHECK(dcq::cli::config_to_json(reparsed) == echo);
}

TEST_CASE("solve: single branch warns about the irrationality hypothesis") {
    fs::path dir = scratch_dir("single");
    std::string raw = R"({"branches": [{"b": 2.0, "p": "1/2"}],
                          "output": {"dir": ")" + (dir / "out").string() + R"("}})";
    fs::path config = write_file(dir, "config.json", raw);
    auto result = run_command(dcq_binary() + " solve --config " + config.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("irrationality hypothesis") != std::string::npos);
    CHECK(read_report(dir / "out").at("regime").at("irrationality_suspect").get<bool>());
}

TEST_CASE("exit codes: 2 for validation errors, 1 for parse errors") {
    fs::path dir = scratch_dir("exits");
    fs::path subcritical = write_file(dir, "sub.json",
                                      R"({"branches": [{"b": 0.5, "p": "1/2"}]})");
    CHECK(run_command(dcq_binary() + " solve --config " + subcritical.string()).exit_code == 2);

    fs::path bad_ratio = write_file(dir, "ratio.json",
                                    R"({"branches": [{"b": 2.0, "p": "3/2"}]})");
    CHECK(run_command(dcq_binary() + " solve --config " + bad_ratio.string()).exit_code == 2);

    fs::path broken = write_file(dir, "broken.json", "{ not json");
    CHECK(run_command(dcq_binary() + " solve --config " + broken.string()).exit_code == 1);

    fs::path wrong_type = write_file(dir, "type.json",
                                     R"({"branches": [{"b": "two", "p": "1/2"}]})");
    CHECK(run_command(dcq_binary() + " solve --config " + wrong_type.string()).exit_code == 1);

    CHECK(run_command(dcq_binary() + " solve --config /nonexistent/x.json").exit_code == 1);
    CHECK(run_command(dcq_binary() + " solve").exit_code == 1);
    CHECK(run_command(dcq_binary() + " frobnicate").exit_code == 1);
    CHECK(run_command(dcq_binary() + " --help").exit_code == 0);
    CHECK(run_command(dcq_binary() + " solve --help").exit_code == 0);
}

TEST_CASE("trace: fixed header, CRLF lines, 17-significant-digit numbers") {
    fs::path dir = scratch_dir("trace");
    fs::path config = write_file(dir, "config.json", half_third_config(dir / "out"));
    auto result = run_command(dcq_binary() + " trace --config " + config.string());
    REQUIRE(result.exit_code == 0);

    std::string csv = read_text(dir / "out" / "trace.csv");
    CHECK(csv.rfind("n,x_n,ratio\r\n", 0) == 0);
    CHECK(csv.find("\r\n") != std::string::npos);

    // every data line: n integer, x_n and ratio round-trip through double
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++rows;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 != std::string::npos);
        double ratio = std::stod(line.substr(c2 + 1));
        CHECK(std::isfinite(ratio));
    }
    CHECK(rows >= 15); // factor-2 checkpoints from 1e5
}

TEST_CASE("trace: final ratio approaches ell_0 for the impulse toll") {
    fs::path dir = scratch_dir("trace2");
    fs::path config = write_file(dir, "config.json", half_third_config(dir / "out"));
    auto result =
        run_command(dcq_binary() + " trace --config " + config.string() + " --horizon 1000000");
    REQUIRE(result.exit_code == 0);
    json report = read_report(dir / "out");
    double final_ratio = report.at("trace").at("final_ratio").get<double>();
    CHECK(std::abs(final_ratio - dcq::testing::kEll0_HalfThird) / dcq::testing::kEll0_HalfThird <=
          0.10);
}

TEST_CASE("trace: constant toll approaches the full limit") {
    fs::path dir = scratch_dir("trace3");
    std::string raw = half_third_config(dir / "out", R"({"kind":"constant","v":1.0})");
    fs::path config = write_file(dir, "config.json", raw);
    auto result =
        run_command(dcq_binary() + " trace --config " + config.string() + " --horizon 1000000");
    REQUIRE(result.exit_code == 0);
    double final_ratio = read_report(dir / "out").at("trace").at("final_ratio").get<double>();
    CHECK(std::abs(final_ratio - dcq::testing::kTotal_HalfThird) / dcq::testing::kTotal_HalfThird <=
          0.10);
}

TEST_CASE("error-to-exit-code mapping covers all three failure classes") {
    using dcq::Error;
    using dcq::errc;
    CHECK(dcq::cli::exit_code_for(Error(errc::parse_error, "")) == 1);
    CHECK(dcq::cli::exit_code_for(Error(errc::subcritical_weight_sum, "")) == 2);
    CHECK(dcq::cli::exit_code_for(Error(errc::ratio_out_of_range, "")) == 2);
    CHECK(dcq::cli::exit_code_for(Error(errc::envelope_too_weak, "")) == 2);
    CHECK(dcq::cli::exit_code_for(Error(errc::toll_index_out_of_range, "")) == 2);
    CHECK(dcq::cli::exit_code_for(Error(errc::internal_inconsistency, "")) == 3);
}

TEST_CASE("trace: file toll shorter than the horizon exits 2") {
    fs::path dir = scratch_dir("shortfile");
    fs::path toll = write_file(dir, "toll.txt", "1.0 2.0 0.5 0.25");
    std::string raw = half_third_config(dir / "out",
                                   R"({"kind":"file","path":")" + toll.string() + R"("})");
    fs::path config = write_file(dir, "config.json", raw);
    auto result = run_command(dcq_binary() + " trace --config " + config.string());
    CHECK(result.exit_code == 2);

    // but a horizon the file does cover works
    auto ok = run_command(dcq_binary() + " trace --config " + config.string() + " --horizon 3");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("coeffs: table values, exact tail marker") {
    fs::path dir = scratch_dir("coeffs");
    fs::path config = write_file(dir, "config.json", half_third_config(dir / "out"));
    auto result = run_command(dcq_binary() + " coeffs --config " + config.string());
    REQUIRE(result.exit_code == 0);
    json report = read_report(dir / "out");
    auto values = report.at("coefficients").at("values").get<std::vector<double>>();
    REQUIRE(values.size() == 33); // truncation 32
    CHECK(values[0] == doctest::Approx(dcq::testing::kEll0_HalfThird).epsilon(1e-10));
    CHECK(values[1] == doctest::Approx(dcq::testing::kEll1_HalfThird).epsilon(1e-10));
    CHECK(report.at("coefficients").at("tail_is_exact").get<bool>());
}

TEST_CASE("limit: impulse value, envelope rejection") {
    fs::path dir = scratch_dir("limit");
    std::string raw = R"({
  "branches": [{"b": 1.0, "p": "1/2"}, {"b": 1.0, "p": "1/3"}],
  "toll": {"kind": "impulse", "j": 0},
  "truncation": 8,
  "envelope": {"c": 0.0, "eta": 0.0},
  "output": {"dir": ")" + (dir / "out").string() + R"("}})";
    fs::path config = write_file(dir, "config.json", raw);
    auto result = run_command(dcq_binary() + " limit --config " + config.string());
    REQUIRE(result.exit_code == 0);
    json report = read_report(dir / "out");
    CHECK(report.at("limit").at("value").get<double>() ==
          doctest::Approx(dcq::testing::kEll0_HalfThird).epsilon(1e-10));
    CHECK(report.at("limit").at("tail_bound").get<double>() == 0.0);

    // eta >= s0 cannot certify the summability hypothesis
    std::string weak = R"({
  "branches": [{"b": 1.0, "p": "1/2"}, {"b": 1.0, "p": "1/3"}],
  "toll": {"kind": "constant", "v": 1.0},
  "envelope": {"c": 1.0, "eta": 0.95},
  "output": {"dir": ")" + (dir / "out").string() + R"("}})";
    fs::path weak_config = write_file(dir, "weak.json", weak);
    CHECK(run_command(dcq_binary() + " limit --config " + weak_config.string()).exit_code == 2);
}

TEST_CASE("limit: constant toll with big J reproduces the closed-form total") {
    fs::path dir = scratch_dir("limit2");
    std::string raw = R"({
  "branches": [{"b": 1.0, "p": "1/2"}, {"b": 1.0, "p": "1/3"}],
  "toll": {"kind": "constant", "v": 1.0},
  "truncation": 1000,
  "envelope": {"c": 1.0, "eta": 0.0},
  "output": {"dir": ")" + (dir / "out").string() + R"("}})";
    fs::path config = write_file(dir, "config.json", raw);
    auto result = run_command(dcq_binary() + " limit --config " + config.string());
    REQUIRE(result.exit_code == 0);
    json report = read_report(dir / "out");
    double value = report.at("limit").at("value").get<double>();
    double tail_exact = report.at("coefficients").at("tail_constant").get<double>();
    CHECK(value + tail_exact ==
          doctest::Approx(dcq::testing::kTotal_HalfThird).epsilon(1e-10));
}

TEST_CASE("mc: header, determinism, warnings, and mgf diagnostics") {
    fs::path dir = scratch_dir("mc");
    std::string raw = half_third_config(dir / "out",
                                   R"({"kind":"driver","variant":"uniform","lo":0.0,"hi":1.0})");
    fs::path config = write_file(dir, "config.json", raw);
    std::string base = dcq_binary() + " mc --config " + config.string() + " --horizon 2000";
    auto result = run_command(base);
    REQUIRE(result.exit_code == 0);
    std::string csv = read_text(dir / "out" / "mc.csv");
    CHECK(csv.rfind("n,q05,q25,median,q75,q95,mean\r\n", 0) == 0);

    auto rerun = run_command(base + " --out " + (dir / "out2").string());
    REQUIRE(rerun.exit_code == 0);
    CHECK(read_text(dir / "out2" / "mc.csv") == csv);

    // Cauchy on a spec with sum b_j p_j <= 1: hypothesis warning, still runs
    std::string cauchy_raw =
        half_third_config(dir / "outc", R"({"kind":"driver","variant":"cauchy"})");
    fs::path cauchy_config = write_file(dir, "cauchy.json", cauchy_raw);
    auto cauchy = run_command(dcq_binary() + " mc --config " + cauchy_config.string() +
                              " --horizon 2000");
    CHECK(cauchy.exit_code == 0);
    CHECK(cauchy.output.find("almost-sure convergence is not") != std::string::npos);

    // geometric-convolution with --mgf prints empirical vs bound
    std::string geo_raw = R"({
  "branches": [{"b": 3.0, "p": "1/2"}, {"b": 3.0, "p": "1/3"}],
  "toll": {"kind": "driver", "variant": "geometric-convolution", "q": 0.5},
  "horizon": 1000, "replicas": 50, "seed": 5,
  "output": {"dir": ")" + (dir / "outg").string() + R"("}})";
    fs::path geo_config = write_file(dir, "geo.json", geo_raw);
    auto geo = run_command(dcq_binary() + " mc --config " + geo_config.string() + " --mgf 0.05");
    REQUIRE(geo.exit_code == 0);
    CHECK(geo.output.find("mgf t=") != std::string::npos);
    json report = read_report(dir / "outg");
    REQUIRE(report.contains("mgf_bound"));
    for (const auto& row : report.at("mgf_bound").at("rows")) {
        CHECK(row.at("empirical").get<double>() <= row.at("bound").get<double>());
    }

    // bad driver parameters exit 2
    std::string bad_raw = half_third_config(
        dir / "outb", R"({"kind":"driver","variant":"geometric-convolution","q":1.5})");
    fs::path bad_config = write_file(dir, "bad.json", bad_raw);
    CHECK(run_command(dcq_binary() + " mc --config " + bad_config.string()).exit_code == 2);
}

TEST_CASE("trace accepts prefix and driver tolls") {
    fs::path dir = scratch_dir("tollkinds");
    std::string prefix_raw = half_third_config(dir / "outp", R"({"kind":"prefix","n0":5})");
    fs::path prefix_config = write_file(dir, "prefix.json", prefix_raw);
    auto prefix_run = run_command(dcq_binary() + " trace --config " + prefix_config.string() +
                                  " --horizon 5000");
    CHECK(prefix_run.exit_code == 0);
    CHECK(read_report(dir / "outp").at("config").at("toll").at("n0").get<std::int64_t>() == 5);

    // driver tolls realize replica 0 deterministically
    std::string driver_raw = half_third_config(
        dir / "outd", R"({"kind":"driver","variant":"shifted-exponential","rate":2.0,"shift":1.0})");
    fs::path driver_config = write_file(dir, "driver.json", driver_raw);
    std::string cmd = dcq_binary() + " trace --config " + driver_config.string() + " --horizon 5000";
    auto first = run_command(cmd);
    CHECK(first.exit_code == 0);
    std::string csv = read_text(dir / "outd" / "trace.csv");
    auto second = run_command(cmd);
    CHECK(second.exit_code == 0);
    CHECK(read_text(dir / "outd" / "trace.csv") == csv);
}

TEST_CASE("every shipped example config parses and solves") {
    const char* configs_env = std::getenv("DCQ_CONFIGS");
#ifdef DCQ_CONFIGS_DEFAULT
    if (!configs_env) configs_env = DCQ_CONFIGS_DEFAULT;
#endif
    REQUIRE(configs_env != nullptr);
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(configs_env)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        CAPTURE(entry.path().string());
        // solve is cheap for any valid config; --out keeps artifacts local
        fs::path dir = scratch_dir("shipped");
        auto result = run_command(dcq_binary() + " solve --config " + entry.path().string() +
                                  " --out " + (dir / "out").string());
        CHECK(result.exit_code == 0);
        dcq::cli::AnalysisConfig parsed = dcq::cli::load_config_file(entry.path().string());
        parsed.out_dir = (dir / "out").string(); // the --out override lands in the echo
        CHECK(dcq::cli::config_from_json(read_report(dir / "out").at("config")) == parsed);
    }
    CHECK(seen >= 5);
}

TEST_CASE("flag overrides beat the config file") {
    fs::path dir = scratch_dir("flags");
    fs::path config = write_file(dir, "config.json", half_third_config(dir / "out"));
    auto result = run_command(dcq_binary() + " coeffs --config " + config.string() +
                              " --trunc 3 --out " + (dir / "alt").string());
    REQUIRE(result.exit_code == 0);
    json report = read_report(dir / "alt");
    CHECK(report.at("coefficients").at("values").get<std::vector<double>>().size() == 4);
    CHECK(report.at("config").at("truncation").get<std::int64_t>() == 3);
}
