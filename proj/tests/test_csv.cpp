#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "core/budget.hpp"
#include "core/constraint.hpp"
#include "core/csvio.hpp"
#include "core/simulate.hpp"

using namespace cbound;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct Cleanup {
  fs::path p;
  ~Cleanup() {
    std::error_code ec;
    fs::remove(p, ec);
  }
};

}  // namespace

TEST_CASE("g17 serialization round-trips doubles exactly") {
  for (double v : {0.1, 1.0 / 3.0, 3.14159265358979323846, 1.928, 0.046,
                   2.5094457500811734e-29, 1e-300, 1e308, -2.75e-17, 0.0,
                   4.9406564584124654e-324, 1000000.0}) {
    const std::string s = format_g17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
    const std::string neg = format_g17(-v);
    CHECK(std::strtod(neg.c_str(), nullptr) == -v);
  }
}

TEST_CASE("content hash matches the reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(to_hex16(0) == "0000000000000000");
  CHECK(to_hex16(0xcbf29ce484222325ull) == "cbf29ce484222325");
  CHECK(to_hex16(0xcbf29ce484222325ull).size() == 16);
}

TEST_CASE("atomic writes leave no temporary behind and fail cleanly") {
  const fs::path p = scratch("csv_atomic.txt");
  Cleanup c{p};
  atomic_write_file(p.string(), "payload\n");
  CHECK(slurp(p) == "payload\n");
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));

  try {
    atomic_write_file("/nonexistent-dir/x.txt", "y");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
  CHECK_FALSE(fs::exists("/nonexistent-dir/x.txt"));
}

TEST_CASE("spectrum artifacts round-trip bitwise with a full header") {
  const NoiseSpectrum s({1e-4, 1.0 / 3.0, 2.5}, {2.5094457500811734e-29, 0.0, 1e-28},
                        SpectrumKind::ForcePsd);
  ArtifactMeta meta;
  meta.config_hash = "00ff00ff00ff00ff";
  meta.seed = 7;
  meta.prng = prng_id;
  meta.notes = {"synthetic check"};

  const fs::path p = scratch("csv_spec.csv");
  Cleanup c{p};
  write_spectrum_csv(p.string(), s, meta);

  const std::string text = slurp(p);
  CHECK(contains(text, "# tool: cbound 0.1.0\n"));
  CHECK(contains(text, "# constants: codata2018\n"));
  CHECK(contains(text, "# config: 00ff00ff00ff00ff\n"));
  CHECK(contains(text, "# seed: 7\n"));
  CHECK(contains(text, std::string("# prng: ") + prng_id + "\n"));
  CHECK(contains(text, "# note: synthetic check\n"));
  CHECK(contains(text, "# kind: force_psd\n"));
  CHECK(contains(text, "frequency_hz,psd\n"));

  const NoiseSpectrum back = read_spectrum_csv(p.string());
  CHECK(back.kind() == SpectrumKind::ForcePsd);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back.freqs()[i] == s.freqs()[i]);
    CHECK(back.values()[i] == s.values()[i]);
  }

  // Identical inputs produce identical bytes (no timestamps or paths).
  const fs::path q = scratch("csv_spec2.csv");
  Cleanup c2{q};
  write_spectrum_csv(q.string(), s, meta);
  CHECK(slurp(q) == text);
}

TEST_CASE("spectrum reader rejects malformed files with positions") {
  const fs::path p = scratch("csv_bad.csv");
  Cleanup c{p};

  spit(p, "frequency_hz,psd\n1e-3,1e-30\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(contains(e.what(), "missing '# kind:"));
  }

  spit(p, "# kind: banana_psd\nfrequency_hz,psd\n1e-3,1e-30\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "unknown spectrum kind 'banana_psd'"));
  }

  spit(p, "# kind: force_psd\nfrequency_hz,psd\n1e-3,1e-30\n2e-3,banana\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(contains(e.what(), "expected a number in column 2"));
    CHECK(e.line() == 4);
    CHECK(e.column() == 2);
  }

  spit(p, "# kind: force_psd\nfrequency_hz,psd\n1e-3,1e-30,9\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "expected 2 columns, got 3"));
    CHECK(e.line() == 3);
  }

  spit(p, "# kind: force_psd\nfrequency_hz,psd\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "no data rows"));
  }

  // Grid violations surface as parse errors naming the file.
  spit(p, "# kind: force_psd\nfrequency_hz,psd\n2e-3,1e-30\n1e-3,1e-30\n");
  try {
    read_spectrum_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(contains(e.what(), p.filename().string()));
  }

  CHECK_THROWS_AS(read_spectrum_csv("/no/such/file.csv"), Error);
}

TEST_CASE("exclusion curve artifacts carry their validity metadata") {
  const TestMass tm = make_test_mass(1.928, 19881.0, 0.046, 4.0e-10);
  const auto grid = log_grid(1e-8, 1e-4, 5);
  const ExclusionCurve curve = exclusion_curve(2.704e-29, tm, grid, "lpf run 3");

  const fs::path p = scratch("csv_curve.csv");
  Cleanup c{p};
  write_curve_csv(p.string(), curve, {});
  const std::string text = slurp(p);
  CHECK(contains(text, "# source: lpf run 3\n"));
  CHECK(contains(text, "# r_valid_max: " + format_g17(curve.r_valid_max) + "\n"));
  CHECK(contains(text, "r_m,lambda_max_per_s\n"));
  std::size_t rows = 0;
  for (std::size_t i = 0; i < curve.r.size(); ++i) {
    const std::string row =
        format_g17(curve.r[i]) + "," + format_g17(curve.lambda_max[i]) + "\n";
    if (contains(text, row)) ++rows;
  }
  CHECK(rows == curve.r.size());
}

TEST_CASE("budget artifacts list every component column pair") {
  const DeviceConfig cfg;
  const BudgetReport report = build_budget(cfg, 1e-4, 1e-1, 3);
  const fs::path p = scratch("csv_budget.csv");
  Cleanup c{p};
  write_budget_csv(p.string(), report, {});
  const std::string text = slurp(p);

  std::string expected_header = "frequency_hz";
  for (const auto& comp : report.components)
    expected_header +=
        "," + comp.name + "_force_n2_per_hz," + comp.name + "_disp_m2_per_hz";
  expected_header += ",total_force_n2_per_hz,total_disp_m2_per_hz";
  expected_header += ",residual_force_n2_per_hz,residual_disp_m2_per_hz";
  CHECK(contains(text, expected_header + "\n"));
  for (const auto& note : report.notes) CHECK(contains(text, "# note: " + note + "\n"));

  std::size_t data_rows = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.substr(0, 4) != "freq") ++data_rows;
  CHECK(data_rows == report.freqs.size());
}

TEST_CASE("run artifacts round-trip through the time-series reader") {
  SimulationParams params{1.0, 1.0, 10.0, 1e-18, 0.05, 1u << 14, 12};
  const SimulationRun run = simulate_oscillator(params);
  ArtifactMeta meta;
  meta.seed = params.seed;
  meta.prng = prng_id;

  const fs::path p = scratch("csv_run.csv");
  Cleanup c{p};
  write_run_csv(p.string(), run, meta);
  const std::string text = slurp(p);
  CHECK(contains(text, "# dt: " + format_g17(params.dt) + "\n"));
  CHECK(contains(text, "# oscillator: m_eff=1 omega_m=1 quality=10 force_psd="));
  CHECK(contains(text, "time_s,position_m,force_n\n"));

  const RunSeries series = read_run_csv(p.string());
  CHECK(series.dt == params.dt);
  REQUIRE(series.position.size() == run.position.size());
  REQUIRE(series.force.size() == run.force.size());
  CHECK(series.time.front() == params.dt);
  for (std::size_t i = 0; i < run.position.size(); ++i) {
    CHECK(series.position[i] == run.position[i]);
    CHECK(series.force[i] == run.force[i]);
  }
}

TEST_CASE("time-series reader handles user files and rejects broken ones") {
  const fs::path p = scratch("csv_series.csv");
  Cleanup c{p};

  spit(p, "time_s,position_m\n0.5,1e-9\n1,2e-9\n1.5,3e-9\n");
  const RunSeries two = read_run_csv(p.string());
  CHECK(two.dt == 0.5);
  CHECK(two.force.empty());
  REQUIRE(two.position.size() == 3);
  CHECK(two.position[2] == 3e-9);

  spit(p, "time_s,position_m\n0.5,1e-9\n1,2e-9\n1.7,3e-9\n");
  try {
    read_run_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(contains(e.what(), "non-uniform sampling"));
  }

  spit(p, "time_s,position_m\n0.5,1e-9\n1,2e-9,7e-12\n");
  try {
    read_run_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "inconsistent column count"));
    CHECK(e.line() == 3);
  }

  spit(p, "time_s,position_m\n0.5,1e-9\n");
  try {
    read_run_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "need at least two samples"));
  }

  spit(p, "time_s,position_m,force_n,extra\n0.5,1,1,1\n1,1,1,1\n");
  try {
    read_run_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "expected 2 or 3 columns, got 4"));
  }
}

TEST_CASE("decay-record reader keeps labels and validates rows") {
  const fs::path p = scratch("csv_runs.csv");
  Cleanup c{p};

  spit(p,
       "t_days,s_brown,sigma,label\n"
       "50,2.7e-29,1e-30,early\n"
       "120,2.0e-29,8e-31,mid,with,commas\n"
       "400,1.4e-29,6e-31\n");
  const auto records = read_runs_csv(p.string());
  REQUIRE(records.size() == 3);
  CHECK(records[0].t_days == 50.0);
  CHECK(records[0].label == "early");
  CHECK(records[1].label == "mid,with,commas");
  CHECK(records[2].label.empty());
  CHECK(records[2].sigma == 6e-31);

  spit(p, "t_days,s_brown,sigma\n50,2.7e-29,1e-30\n120,2.0e-29,-1\n");
  try {
    read_runs_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(contains(e.what(), "uncertainty must be positive"));
    CHECK(e.line() == 3);
  }

  spit(p, "t_days,s_brown,sigma\n50,2.7e-29\n");
  try {
    read_runs_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "expected at least 3 columns"));
  }

  spit(p, "t_days,s_brown,sigma\n");
  try {
    read_runs_csv(p.string());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "no data rows"));
  }
}
