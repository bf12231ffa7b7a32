// Command-line surface. Talks to the library exclusively through the C API;
// everything here is argument plumbing, JSON shaping and artifact naming.
//
// Exit codes: 0 success, 1 usage, 2 input/validation failure, 3 numerical
// failure. With --errors json diagnostics go to stderr as one JSON object.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbound.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CliError {
  int exit_code;
  std::string code_name;
  std::string message;
};

template <class T>
using Owned = std::unique_ptr<T, void (*)(T*)>;

int exit_code_for(cb_status s) {
  return (s == CB_E_NUMERIC || s == CB_E_UNKNOWN) ? 3 : 2;
}

const char* status_name(cb_status s) {
  switch (s) {
    case CB_OK: return "ok";
    case CB_E_INVALID_ARGUMENT: return "invalid_argument";
    case CB_E_DOMAIN: return "domain_error";
    case CB_E_REGIME: return "regime_error";
    case CB_E_PARSE: return "parse_error";
    case CB_E_IO: return "io_error";
    case CB_E_NUMERIC: return "numeric_error";
    case CB_E_MISSING_CONTEXT: return "missing_context";
    case CB_E_UNKNOWN: return "internal_error";
  }
  return "internal_error";
}

// All fallible C calls in the command bodies go through here.
void check(cb_status s) {
  if (s != CB_OK) throw CliError{exit_code_for(s), status_name(s), cb_last_error()};
}

void collect_warning(std::vector<std::string>& warnings) {
  const char* w = cb_last_warning();
  if (w && w[0]) warnings.push_back(w);
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string hash_bytes(const std::string& bytes) {
  char buf[17];
  check(cb_hash_hex(bytes.data(), bytes.size(), buf, sizeof buf));
  return buf;
}

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "io_error", "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Plot files are written by the CLI itself (plain two-column tables with #
// comments, which gnuplot ignores): same atomic discipline as artifacts.
void write_plot_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{2, "io_error", "cannot write " + tmp};
    out << content;
    if (!out.flush()) throw CliError{2, "io_error", "write failed for " + tmp};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CliError{2, "io_error", "cannot move " + tmp + " to " + path};
}

std::string plot_header(const std::string& input_hash) {
  std::string h;
  h += std::string("# tool: cbound ") + cb_version() + "\n";
  h += std::string("# constants: ") + cb_constants_set() + "\n";
  h += "# config: " + input_hash + "\n";
  return h;
}

struct ResolvedConfig {
  Owned<cb_config> config{nullptr, cb_config_free};
  std::string source;  // "profile:<name>" or the file path
  std::string hash;
};

ResolvedConfig resolve_config(const std::string& profile,
                              const std::string& config_path) {
  if (profile.empty() == config_path.empty())
    throw CliError{1, "usage", "exactly one of --profile or --config is required"};
  ResolvedConfig rc;
  cb_config* raw = nullptr;
  if (!profile.empty()) {
    check(cb_config_profile(profile.c_str(), &raw));
    rc.source = "profile:" + profile;
  } else {
    check(cb_config_load(config_path.c_str(), &raw));
    rc.source = config_path;
  }
  rc.config.reset(raw);
  char buf[17];
  check(cb_config_hash(raw, buf, sizeof buf));
  rc.hash = buf;
  return rc;
}

Owned<cb_mass> config_mass(const ResolvedConfig& rc) {
  cb_mass* m = nullptr;
  check(cb_config_mass(rc.config.get(), &m));
  return Owned<cb_mass>(m, cb_mass_free);
}

Owned<cb_device> config_device(const ResolvedConfig& rc) {
  cb_device* d = nullptr;
  check(cb_config_device(rc.config.get(), &d));
  return Owned<cb_device>(d, cb_device_free);
}

double config_m0(const ResolvedConfig& rc) {
  double m0 = 0.0;
  check(cb_config_m0(rc.config.get(), &m0));
  return m0;
}

double mass_field(const cb_mass* m, const char* field) {
  double v = 0.0;
  check(cb_mass_get(m, field, &v));
  return v;
}

double device_field(const cb_device* d, const char* field) {
  double v = 0.0;
  check(cb_device_get(d, field, &v));
  return v;
}

json mass_json(const cb_mass* m) {
  return json{{"mass_kg", mass_field(m, "mass")},
              {"density_kg_m3", mass_field(m, "density")},
              {"side_m", mass_field(m, "side")},
              {"lattice_m", mass_field(m, "lattice")}};
}

void print_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

/* ---- subcommand bodies ------------------------------------------------ */

struct BoundArgs {
  std::string profile, config;
  double sa = 0.0, r = 0.0;
};

void run_bound(const BoundArgs& a) {
  ResolvedConfig rc = resolve_config(a.profile, a.config);
  Owned<cb_mass> mass = config_mass(rc);
  const double m0 = config_m0(rc);
  std::vector<std::string> warnings;

  double lambda = 0.0;
  check(cb_csl_lambda_bound(mass.get(), a.sa, a.r, m0, &lambda));
  collect_warning(warnings);
  double sigma = 0.0;
  check(cb_dp_sigma_bound(mass.get(), a.sa, &sigma));
  double r_valid = 0.0;
  check(cb_csl_r_valid_max(mass.get(), &r_valid));

  json out{{"inputs",
            {{"source", rc.source},
             {"config_hash", rc.hash},
             {"sa_m2_s4_per_hz", a.sa},
             {"r_m", a.r},
             {"m0_kg", m0},
             {"test_mass", mass_json(mass.get())}}},
           {"lambda_max_s_inv", lambda},
           {"sigma_dp_min_m", sigma},
           {"r_valid_max_m", r_valid},
           {"warnings", warnings}};
  print_json(out);
}

struct ExclusionArgs {
  std::string profile, config, out, label, plot_dir;
  double sa = 0.0, r_min = 0.0, r_max = 0.0;
  std::size_t points = 0;
  bool emit_json = false;
};

void run_exclusion(const ExclusionArgs& a) {
  ResolvedConfig rc = resolve_config(a.profile, a.config);
  Owned<cb_mass> mass = config_mass(rc);
  const double m0 = config_m0(rc);

  double r_valid = 0.0;
  check(cb_csl_r_valid_max(mass.get(), &r_valid));
  if (a.r_max > r_valid)
    throw CliError{2, "regime_error",
                   "--r-max " + g17(a.r_max) +
                       " m exceeds the compact-limit validity cutoff " +
                       g17(r_valid) + " m for this test mass"};

  const std::string label = a.label.empty() ? rc.source : a.label;
  cb_curve* raw = nullptr;
  check(cb_exclusion_curve(mass.get(), a.sa, a.r_min, a.r_max, a.points,
                           label.c_str(), m0, &raw));
  Owned<cb_curve> curve(raw, cb_curve_free);

  const std::string input_hash =
      hash_bytes(rc.hash + ";exclusion;sa=" + g17(a.sa) + ";rmin=" + g17(a.r_min) +
                 ";rmax=" + g17(a.r_max) + ";points=" + std::to_string(a.points) +
                 ";label=" + label);
  cb_artifact_meta meta{input_hash.c_str(), 0, 0, nullptr};
  check(cb_curve_write_csv(curve.get(), a.out.c_str(), &meta));

  json benchmarks = json::array();
  for (std::size_t i = 0; i < cb_benchmark_count(); ++i) {
    const char* name = nullptr;
    double lambda = 0.0, r = 0.0, halfwidth = 0.0;
    check(cb_benchmark_get(i, &name, &lambda, &r, &halfwidth));
    json b{{"name", name},
           {"lambda_s_inv", lambda},
           {"r_m", r},
           {"lambda_log10_halfwidth", halfwidth}};
    int excluded = 0;
    if (cb_curve_excludes(curve.get(), lambda, r, &excluded) == CB_OK) {
      b["in_range"] = true;
      b["excluded"] = excluded != 0;
    } else {
      b["in_range"] = false;
    }
    benchmarks.push_back(std::move(b));
  }

  if (!a.plot_dir.empty()) {
    std::filesystem::create_directories(a.plot_dir);
    std::string dat = plot_header(input_hash);
    dat += "# r_m lambda_max_s_inv\n";
    const std::size_t n = cb_curve_size(curve.get());
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, l = 0.0;
      check(cb_curve_point(curve.get(), i, &r, &l));
      dat += g17(r) + " " + g17(l) + "\n";
    }
    write_plot_file(a.plot_dir + "/curve.dat", dat);

    std::string bm = plot_header(input_hash);
    bm += "# r_m lambda_s_inv lambda_log10_halfwidth name\n";
    for (const json& b : benchmarks) {
      bm += g17(b["r_m"].get<double>()) + " " +
            g17(b["lambda_s_inv"].get<double>()) + " " +
            g17(b["lambda_log10_halfwidth"].get<double>()) + " \"" +
            b["name"].get<std::string>() + "\"\n";
    }
    write_plot_file(a.plot_dir + "/benchmarks.dat", bm);
  }

  if (a.emit_json) {
    json out{{"inputs",
              {{"source", rc.source},
               {"config_hash", rc.hash},
               {"sa_m2_s4_per_hz", a.sa},
               {"r_min_m", a.r_min},
               {"r_max_m", a.r_max},
               {"points", a.points}}},
             {"out", a.out},
             {"n_points", cb_curve_size(curve.get())},
             {"dropped", cb_curve_dropped(curve.get())},
             {"r_valid_max_m", r_valid},
             {"benchmarks", benchmarks}};
    print_json(out);
  }
}

struct BudgetArgs {
  std::string profile, config, out, plot_dir;
  double f_min = 1e-4, f_max = 0.1;
  std::size_t points = 200;
  bool emit_json = false;
};

void run_budget(const BudgetArgs& a) {
  ResolvedConfig rc = resolve_config(a.profile, a.config);
  Owned<cb_device> device = config_device(rc);

  cb_budget* raw = nullptr;
  check(cb_budget_build(device.get(), a.f_min, a.f_max, a.points, &raw));
  Owned<cb_budget> budget(raw, cb_budget_free);

  const std::string input_hash =
      hash_bytes(rc.hash + ";budget;fmin=" + g17(a.f_min) + ";fmax=" +
                 g17(a.f_max) + ";points=" + std::to_string(a.points));
  cb_artifact_meta meta{input_hash.c_str(), 0, 0, nullptr};
  check(cb_budget_write_csv(budget.get(), a.out.c_str(), &meta));

  const std::size_t np = cb_budget_points(budget.get());
  const std::size_t nc = cb_budget_component_count(budget.get());

  if (!a.plot_dir.empty()) {
    std::filesystem::create_directories(a.plot_dir);
    auto asd_file = [&](const std::string& name, auto value_at) {
      std::string dat = plot_header(input_hash);
      dat += "# frequency_hz force_asd_n_per_sqrt_hz\n";
      for (std::size_t i = 0; i < np; ++i) {
        double f = 0.0;
        check(cb_budget_frequency(budget.get(), i, &f));
        dat += g17(f) + " " + g17(std::sqrt(value_at(i))) + "\n";
      }
      write_plot_file(a.plot_dir + "/" + name + ".dat", dat);
    };
    for (std::size_t c = 0; c < nc; ++c) {
      const std::string name = cb_budget_component_name(budget.get(), c);
      asd_file(name, [&](std::size_t i) {
        double v = 0.0;
        check(cb_budget_value(budget.get(), c, i, 0, &v));
        return v;
      });
    }
    asd_file("total", [&](std::size_t i) {
      double v = 0.0;
      check(cb_budget_total(budget.get(), i, 0, 0, &v));
      return v;
    });
    asd_file("calibrated_residual", [&](std::size_t i) {
      double v = 0.0;
      check(cb_budget_total(budget.get(), i, 0, 1, &v));
      return v;
    });
  }

  if (a.emit_json) {
    json freqs = json::array();
    for (std::size_t i = 0; i < np; ++i) {
      double f = 0.0;
      check(cb_budget_frequency(budget.get(), i, &f));
      freqs.push_back(f);
    }
    json components = json::object();
    for (std::size_t c = 0; c < nc; ++c) {
      json force = json::array(), disp = json::array();
      for (std::size_t i = 0; i < np; ++i) {
        double vf = 0.0, vd = 0.0;
        check(cb_budget_value(budget.get(), c, i, 0, &vf));
        check(cb_budget_value(budget.get(), c, i, 1, &vd));
        force.push_back(vf);
        disp.push_back(vd);
      }
      components[cb_budget_component_name(budget.get(), c)] = {
          {"force_n2_per_hz", std::move(force)},
          {"disp_m2_per_hz", std::move(disp)}};
    }
    auto totals = [&](int residual) {
      json force = json::array(), disp = json::array();
      for (std::size_t i = 0; i < np; ++i) {
        double vf = 0.0, vd = 0.0;
        check(cb_budget_total(budget.get(), i, 0, residual, &vf));
        check(cb_budget_total(budget.get(), i, 1, residual, &vd));
        force.push_back(vf);
        disp.push_back(vd);
      }
      return json{{"force_n2_per_hz", std::move(force)},
                  {"disp_m2_per_hz", std::move(disp)}};
    };
    json notes = json::array();
    for (std::size_t i = 0; i < cb_budget_note_count(budget.get()); ++i)
      notes.push_back(cb_budget_note(budget.get(), i));
    json out{{"inputs",
              {{"source", rc.source},
               {"config_hash", rc.hash},
               {"f_min_hz", a.f_min},
               {"f_max_hz", a.f_max},
               {"points", a.points}}},
             {"out", a.out},
             {"frequency_hz", std::move(freqs)},
             {"components", std::move(components)},
             {"total", totals(0)},
             {"calibrated_residual", totals(1)},
             {"notes", std::move(notes)}};
    print_json(out);
  }
}

struct SimulateArgs {
  std::string profile, config, out;
  double duration = 0.0;
  double dt = 0.0;         // 0 selects the stability default
  double force_psd = -1.0; // <0 selects the thermal level at resonance
  std::uint64_t seed = 1;
};

void run_simulate(const SimulateArgs& a) {
  ResolvedConfig rc = resolve_config(a.profile, a.config);
  Owned<cb_device> device = config_device(rc);

  const double m_eff = device_field(device.get(), "effective_mass");
  const double omega_m = device_field(device.get(), "omega_m");
  const double quality = device_field(device.get(), "quality");
  const double dt = a.dt > 0.0 ? a.dt : 0.05 / omega_m;

  double force_psd = a.force_psd;
  if (force_psd < 0.0) {
    const double f_m = omega_m / (2.0 * M_PI);
    check(cb_device_noise(device.get(), "suspension_thermal", f_m, 0, &force_psd));
  }

  if (a.duration <= 0.0)
    throw CliError{2, "invalid_argument", "--duration must be positive"};
  const auto n = static_cast<std::uint64_t>(std::llround(a.duration / dt));

  cb_run* raw = nullptr;
  check(cb_simulate(m_eff, omega_m, quality, force_psd, dt, n, a.seed, &raw));
  Owned<cb_run> run(raw, cb_run_free);

  const std::string input_hash = hash_bytes(
      rc.hash + ";simulate;dt=" + g17(dt) + ";n=" + std::to_string(n) +
      ";force_psd=" + g17(force_psd) + ";seed=" + std::to_string(a.seed));
  cb_artifact_meta meta{input_hash.c_str(), 1, a.seed, nullptr};
  check(cb_run_write_csv(run.get(), a.out.c_str(), &meta));
}

struct EstimateArgs {
  std::string in, out, column = "position";
  std::size_t segment = 4096;
  double overlap = 0.5;
};

void run_estimate(const EstimateArgs& a) {
  cb_run* raw = nullptr;
  check(cb_run_read_csv(a.in.c_str(), &raw));
  Owned<cb_run> run(raw, cb_run_free);

  const double* data = nullptr;
  std::size_t n = 0;
  cb_spectrum_kind kind;
  if (a.column == "position") {
    check(cb_run_positions(run.get(), &data, &n));
    kind = CB_KIND_DISPLACEMENT_PSD;
  } else if (a.column == "force") {
    check(cb_run_forces(run.get(), &data, &n));
    kind = CB_KIND_FORCE_PSD;
  } else {
    throw CliError{1, "usage", "--column must be position or force"};
  }
  if (n == 0)
    throw CliError{2, "invalid_argument",
                   "input has no " + a.column + " samples"};
  double dt = 0.0;
  check(cb_run_dt(run.get(), &dt));

  cb_spectrum* sraw = nullptr;
  check(cb_welch(data, n, dt, a.segment, a.overlap, kind, &sraw));
  Owned<cb_spectrum> psd(sraw, cb_spectrum_free);

  const std::string input_hash = hash_bytes(
      hash_bytes(file_bytes(a.in)) + ";estimate-psd;segment=" +
      std::to_string(a.segment) + ";overlap=" + g17(a.overlap) +
      ";column=" + a.column);
  cb_artifact_meta meta{input_hash.c_str(), 0, 0, nullptr};
  check(cb_spectrum_write_csv(psd.get(), a.out.c_str(), &meta));
}

struct DecomposeArgs {
  std::string in;
  bool free_exponent = false;
};

void run_decompose(const DecomposeArgs& a) {
  cb_spectrum* raw = nullptr;
  check(cb_spectrum_read_csv(a.in.c_str(), &raw));
  Owned<cb_spectrum> psd(raw, cb_spectrum_free);

  double white = 0.0, colored = 0.0, exponent = 0.0, residual = 0.0;
  check(cb_decompose(psd.get(), a.free_exponent ? 1 : 0, &white, &colored,
                     &exponent, &residual));
  print_json(json{{"inputs", {{"in", a.in}, {"free_exponent", a.free_exponent}}},
                  {"white_level", white},
                  {"colored_coeff", colored},
                  {"exponent", exponent},
                  {"residual", residual}});
}

void run_fit_decay(const std::string& in) {
  cb_runs* raw = nullptr;
  check(cb_runs_read_csv(in.c_str(), &raw));
  Owned<cb_runs> runs(raw, cb_runs_free);

  double exponent = 0.0, stderr_ = 0.0, amplitude = 0.0;
  check(cb_fit_decay(runs.get(), &exponent, &stderr_, &amplitude));
  print_json(json{{"inputs", {{"in", in}, {"n_records", cb_runs_size(runs.get())}}},
                  {"exponent", exponent},
                  {"exponent_stderr", stderr_},
                  {"amplitude", amplitude}});
}

}  // namespace

int main(int argc, char** argv) {
  bool errors_json = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--errors=json" ||
        (arg == "--errors" && i + 1 < argc && std::string(argv[i + 1]) == "json"))
      errors_json = true;
  }
  auto emit_error = [&](const std::string& code, const std::string& message) {
    if (errors_json) {
      const json j{{"error", {{"code", code}, {"message", message}}}};
      std::fprintf(stderr, "%s\n", j.dump().c_str());
    } else {
      std::fprintf(stderr, "error: %s\n", message.c_str());
    }
  };

  CLI::App app{"collapse-model bounds and torsion-balance noise forecasts"};
  app.require_subcommand(1);
  std::string errors_mode = "text";
  app.add_option("--errors", errors_mode, "error reporting mode: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.set_version_flag("--version", std::string("cbound ") + cb_version());

  BoundArgs bound;
  CLI::App* cmd = app.add_subcommand(
      "bound", "invert a white acceleration-noise level into model bounds");
  cmd->add_option("--profile", bound.profile, "built-in profile (table1, lpf)");
  cmd->add_option("--config", bound.config, "configuration file");
  cmd->add_option("--sa", bound.sa,
                  "white differential acceleration PSD, m^2 s^-4 / Hz")
      ->required();
  cmd->add_option("--r", bound.r, "localization correlation length, m")->required();
  cmd->callback([&] { run_bound(bound); });

  ExclusionArgs excl;
  cmd = app.add_subcommand("exclusion",
                           "maximum collapse rate versus correlation length");
  cmd->add_option("--profile", excl.profile, "built-in profile (table1, lpf)");
  cmd->add_option("--config", excl.config, "configuration file");
  cmd->add_option("--sa", excl.sa,
                  "white differential acceleration PSD, m^2 s^-4 / Hz")
      ->required();
  cmd->add_option("--r-min", excl.r_min, "smallest correlation length, m")->required();
  cmd->add_option("--r-max", excl.r_max, "largest correlation length, m")->required();
  cmd->add_option("--points", excl.points, "grid points")->required();
  cmd->add_option("--out", excl.out, "output curve CSV")->required();
  cmd->add_option("--label", excl.label, "source label stored in the artifact");
  cmd->add_option("--plot-data", excl.plot_dir,
                  "directory for gnuplot-ready two-column files");
  cmd->add_flag("--json", excl.emit_json, "print curve summary and benchmarks");
  cmd->callback([&] { run_exclusion(excl); });

  BudgetArgs budget;
  cmd = app.add_subcommand("budget", "per-source noise forecast for the device");
  cmd->add_option("--profile", budget.profile, "built-in profile (table1)");
  cmd->add_option("--config", budget.config, "configuration file");
  cmd->add_option("--f-min", budget.f_min, "band start, Hz");
  cmd->add_option("--f-max", budget.f_max, "band end, Hz");
  cmd->add_option("--points", budget.points, "grid points");
  cmd->add_option("--out", budget.out, "output budget CSV")->required();
  cmd->add_option("--plot-data", budget.plot_dir,
                  "directory for gnuplot-ready per-source ASD files");
  cmd->add_flag("--json", budget.emit_json, "print the full budget as JSON");
  cmd->callback([&] { run_budget(budget); });

  SimulateArgs sim;
  cmd = app.add_subcommand("simulate",
                           "time-domain oscillator run driven by white force noise");
  cmd->add_option("--profile", sim.profile, "built-in profile (table1)");
  cmd->add_option("--config", sim.config, "configuration file");
  cmd->add_option("--duration", sim.duration, "run length, s")->required();
  cmd->add_option("--dt", sim.dt, "sample spacing, s (default 0.05/omega_m)");
  cmd->add_option("--force-psd", sim.force_psd,
                  "white force PSD to inject, N^2/Hz (default: suspension "
                  "thermal level at the resonance)");
  cmd->add_option("--seed", sim.seed, "PRNG seed");
  cmd->add_option("--out", sim.out, "output run CSV")->required();
  cmd->callback([&] { run_simulate(sim); });

  EstimateArgs est;
  cmd = app.add_subcommand("estimate-psd", "Welch PSD of a recorded run");
  cmd->add_option("--in", est.in, "input run CSV")->required();
  cmd->add_option("--segment", est.segment, "segment length, samples");
  cmd->add_option("--overlap", est.overlap, "fractional segment overlap [0, 0.9]");
  cmd->add_option("--column", est.column, "position or force");
  cmd->add_option("--out", est.out, "output spectrum CSV")->required();
  cmd->callback([&] { run_estimate(est); });

  DecomposeArgs dec;
  cmd = app.add_subcommand("decompose",
                           "split a PSD into white plus 1/f components");
  cmd->add_option("--in", dec.in, "input spectrum CSV")->required();
  cmd->add_flag("--free-exponent", dec.free_exponent,
                "fit the colored exponent instead of fixing it at -1");
  cmd->callback([&] { run_decompose(dec); });

  std::string fit_in;
  cmd = app.add_subcommand("fit-decay",
                           "power-law fit of noise level versus run time");
  cmd->add_option("--in", fit_in, "input run-table CSV")->required();
  cmd->callback([&] { run_fit_decay(fit_in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 1;
  } catch (const CliError& e) {
    emit_error(e.code_name, e.message);
    return e.exit_code;
  }
  return 0;
}
