#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "core/fits.hpp"
#include "core/simulate.hpp"
#include "core/spectrum.hpp"
#include "core/welch.hpp"

using namespace cbound;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_freqs(double lo, double hi, std::size_t n) {
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i)
    f[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  return f;
}
}  // namespace

/* ---- spectra ---------------------------------------------------------- */

TEST_CASE("spectrum construction validates its grid and values") {
  CHECK_NOTHROW(NoiseSpectrum({1.0, 2.0}, {0.0, 1.0}, SpectrumKind::ForcePsd));
  CHECK_THROWS_AS(NoiseSpectrum({}, {}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({1.0}, {1.0, 2.0}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({1.0, 1.0}, {1.0, 1.0}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({2.0, 1.0}, {1.0, 1.0}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({0.0, 1.0}, {1.0, 1.0}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({1.0, 2.0}, {1.0, -1.0}, SpectrumKind::ForcePsd), Error);
  CHECK_THROWS_AS(NoiseSpectrum({1.0, 2.0}, {1.0, std::nan("")}, SpectrumKind::ForcePsd),
                  Error);
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {SpectrumKind::AccelPsd, SpectrumKind::ForcePsd,
                    SpectrumKind::TorquePsd, SpectrumKind::DisplacementPsd,
                    SpectrumKind::AnglePsd}) {
    auto back = spectrum_kind_from_name(spectrum_kind_name(kind));
    REQUIRE(back.has_value());
    CHECK(*back == kind);
  }
  CHECK_FALSE(spectrum_kind_from_name("velocity_psd").has_value());
}

TEST_CASE("interpolation is linear in value against log frequency") {
  const NoiseSpectrum s({1e-3, 1e-2, 1e-1}, {2.0, 6.0, 10.0}, SpectrumKind::AccelPsd);
  CHECK(s.value_at(1e-2) == 6.0);  // exact node
  // Log midpoint between 1e-3 and 1e-2.
  const double fm = std::sqrt(1e-3 * 1e-2);
  CHECK(s.value_at(fm) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(s.value_at(1e-3) == 2.0);
  CHECK(s.value_at(1e-1) == 10.0);
  CHECK_THROWS_AS(s.value_at(0.9e-3), Error);
  CHECK_THROWS_AS(s.value_at(1.1e-1), Error);
  try {
    s.value_at(1.0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("conversion between differential acceleration and force") {
  const std::vector<double> f{1e-4, 1e-3, 1e-2};
  const NoiseSpectrum accel(f, {2.704e-29, 2.704e-29, 2.704e-29},
                            SpectrumKind::AccelPsd);
  ConversionContext ctx;
  ctx.mass = 1.928;

  const NoiseSpectrum force = convert_spectrum(accel, SpectrumKind::ForcePsd, ctx);
  CHECK(force.kind() == SpectrumKind::ForcePsd);
  for (double v : force.values())
    CHECK(v == doctest::Approx(2.5128163839999997e-29).epsilon(1e-12));

  const NoiseSpectrum back = convert_spectrum(force, SpectrumKind::AccelPsd, ctx);
  for (std::size_t i = 0; i < back.size(); ++i)
    CHECK(back.values()[i] == doctest::Approx(accel.values()[i]).epsilon(1e-12));

  const NoiseSpectrum f2(f, {1e-34, 1e-34, 1e-34}, SpectrumKind::ForcePsd);
  const NoiseSpectrum a2 = convert_spectrum(f2, SpectrumKind::AccelPsd, ctx);
  for (double v : a2.values())
    CHECK(v == doctest::Approx(1.0760834007678933e-34).epsilon(1e-12));
}

TEST_CASE("force to displacement uses the structural-damping response") {
  const OscillatorParams osc{2.0, 2.0 * kPi * 1e-3, 1e6};
  ConversionContext ctx;
  ctx.oscillator = osc;
  const std::vector<double> f{1e-4, 1e-3, 1e-2};
  const NoiseSpectrum force(f, {1e-30, 1e-30, 1e-30}, SpectrumKind::ForcePsd);
  const NoiseSpectrum disp = convert_spectrum(force, SpectrumKind::DisplacementPsd, ctx);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double chi2 = std::norm(oscillator_susceptibility(osc, f[i]));
    CHECK(disp.values()[i] == doctest::Approx(1e-30 * chi2).epsilon(1e-12));
  }
  // At resonance |chi| = Q / (M w^2).
  const double w = osc.omega_m;
  const double chi_res = std::abs(oscillator_susceptibility(osc, w / (2.0 * kPi)));
  CHECK(chi_res == doctest::Approx(osc.quality / (osc.m_eff * w * w)).epsilon(1e-12));
}

TEST_CASE("multi-hop conversion composes the edge factors") {
  ConversionContext ctx;
  ctx.mass = 1.928;
  ctx.lever_arm = 0.05;
  ctx.oscillator = OscillatorParams{2.0, 2.0 * kPi * 1e-3, 1e6};
  const std::vector<double> f{1e-3, 2e-3};
  const NoiseSpectrum accel(f, {1e-28, 1e-28}, SpectrumKind::AccelPsd);
  const NoiseSpectrum angle = convert_spectrum(accel, SpectrumKind::AnglePsd, ctx);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double chi2 = std::norm(oscillator_susceptibility(*ctx.oscillator, f[i]));
    const double expected = 1e-28 * (1.928 * 1.928 / 4.0) * chi2 / (0.05 * 0.05);
    CHECK(angle.values()[i] == doctest::Approx(expected).epsilon(1e-12));
  }

  // Torque goes through force.
  const NoiseSpectrum torque(f, {1e-32, 1e-32}, SpectrumKind::TorquePsd);
  const NoiseSpectrum disp = convert_spectrum(torque, SpectrumKind::DisplacementPsd, ctx);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double chi2 = std::norm(oscillator_susceptibility(*ctx.oscillator, f[i]));
    CHECK(disp.values()[i] ==
          doctest::Approx(1e-32 / (0.05 * 0.05) * chi2).epsilon(1e-12));
  }
}

TEST_CASE("conversions name the missing context") {
  const NoiseSpectrum accel({1e-3, 1e-2}, {1e-28, 1e-28}, SpectrumKind::AccelPsd);
  try {
    convert_spectrum(accel, SpectrumKind::ForcePsd, {});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingContext);
    CHECK(std::string(e.what()).find("mass") != std::string::npos);
  }

  const NoiseSpectrum force({1e-3, 1e-2}, {1e-30, 1e-30}, SpectrumKind::ForcePsd);
  try {
    convert_spectrum(force, SpectrumKind::DisplacementPsd, {});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingContext);
    CHECK(std::string(e.what()).find("oscillator") != std::string::npos);
  }
  try {
    convert_spectrum(force, SpectrumKind::TorquePsd, {});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingContext);
    CHECK(std::string(e.what()).find("lever_arm") != std::string::npos);
  }
}

TEST_CASE("same-kind conversion is the identity") {
  const NoiseSpectrum s({1e-3, 1e-2}, {1.0, 2.0}, SpectrumKind::ForcePsd);
  const NoiseSpectrum t = convert_spectrum(s, SpectrumKind::ForcePsd, {});
  CHECK(t.freqs() == s.freqs());
  CHECK(t.values() == s.values());
}

TEST_CASE("resampling matches pointwise interpolation and guards the band") {
  const NoiseSpectrum s({1e-3, 1e-2, 1e-1}, {2.0, 6.0, 10.0}, SpectrumKind::ForcePsd);
  const std::vector<double> grid{2e-3, 5e-3, 5e-2};
  const NoiseSpectrum r = resample(s, grid);
  CHECK(r.kind() == s.kind());
  REQUIRE(r.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(r.values()[i] == s.value_at(grid[i]));
  const std::vector<double> outside{1e-4};
  CHECK_THROWS_AS(resample(s, outside), Error);
}

/* ---- deterministic PRNG ------------------------------------------------ */

TEST_CASE("gaussian source is reproducible and well formed") {
  GaussianRng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  double sum = 0.0, sum2 = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double xa = a.normal();
    const double xb = b.normal();
    const double xc = c.normal();
    all_equal = all_equal && (xa == xb);
    any_diff = any_diff || (xa != xc);
    sum += xa;
    sum2 += xa * xa;
  }
  CHECK(all_equal);
  CHECK(any_diff);
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));

  GaussianRng u(7);
  for (int i = 0; i < 100000; ++i) {
    const double x = u.uniform();
    REQUIRE(x > 0.0);
    REQUIRE(x <= 1.0);
  }

  CHECK(std::string(prng_id) == "mt19937_64-box-muller");
}

/* ---- oscillator simulation --------------------------------------------- */

TEST_CASE("simulation parameter validation") {
  SimulationParams p{1.0, 1.0, 10.0, 1e-18, 0.05, 1u << 14, 1};
  CHECK_NOTHROW(p.validate());

  SimulationParams bad = p;
  bad.dt = 0.2;  // dt*omega = 0.2 >= 0.1
  try {
    bad.validate();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }

  bad = p;
  bad.n = (1u << 14) - 1;
  try {
    bad.validate();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }

  bad = p;
  bad.m_eff = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.force_psd = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("simulation is bit-reproducible per seed") {
  const SimulationParams p{1.0, 1.0, 10.0, 1e-18, 0.05, 1u << 14, 99};
  const SimulationRun a = simulate_oscillator(p);
  const SimulationRun b = simulate_oscillator(p);
  CHECK(a.position == b.position);
  CHECK(a.force == b.force);

  SimulationParams q = p;
  q.seed = 100;
  const SimulationRun c = simulate_oscillator(q);
  CHECK(a.position != c.position);
}

TEST_CASE("zero drive stays at rest; force column carries the injected noise") {
  SimulationParams p{1.0, 1.0, 10.0, 0.0, 0.05, 1u << 14, 5};
  const SimulationRun still = simulate_oscillator(p);
  for (double x : still.position) REQUIRE(x == 0.0);

  p.force_psd = 1e-18;
  p.n = 1u << 19;
  const SimulationRun run = simulate_oscillator(p);
  double sum2 = 0.0;
  for (double f : run.force) sum2 += f * f;
  const double var = sum2 / static_cast<double>(run.force.size());
  // Zero-order-hold white noise: var = S_F / (2 dt).
  CHECK(var == doctest::Approx(p.force_psd / (2.0 * p.dt)).epsilon(0.03));
}

TEST_CASE("steady-state position variance matches the Langevin prediction") {
  // var(x) = S_F Q / (4 M^2 w^3) for one-sided S_F.
  SimulationParams p{1.0, 1.0, 10.0, 1e-18, 0.05, 1u << 19, 2026};
  const SimulationRun run = simulate_oscillator(p);
  // Discard the transient (several relaxation times tau = 2Q/w = 20 s).
  const std::size_t skip = static_cast<std::size_t>(200.0 / p.dt);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = skip; i < run.position.size(); ++i) {
    sum += run.position[i];
    sum2 += run.position[i] * run.position[i];
  }
  const double n = static_cast<double>(run.position.size() - skip);
  const double var = sum2 / n - (sum / n) * (sum / n);
  CHECK(var == doctest::Approx(2.5e-18).epsilon(0.10));
}

TEST_CASE("thermal drive satisfies equipartition") {
  // Viscous-damping FDT level S_F = 4 kB T M gamma with gamma = w/Q gives
  // var(x) = kB T / (M w^2) independently of Q.
  const double kB = 1.380649e-23, T = 300.0, M = 2.0, w = 1.0, Q = 10.0;
  const double s_f = 4.0 * kB * T * M * (w / Q);
  CHECK(s_f == doctest::Approx(3.31356e-21).epsilon(1e-9));
  SimulationParams p{M, w, Q, s_f, 0.05, 1u << 19, 7};
  const SimulationRun run = simulate_oscillator(p);
  const std::size_t skip = static_cast<std::size_t>(200.0 / p.dt);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = skip; i < run.position.size(); ++i) {
    sum += run.position[i];
    sum2 += run.position[i] * run.position[i];
  }
  const double n = static_cast<double>(run.position.size() - skip);
  const double var = sum2 / n - (sum / n) * (sum / n);
  CHECK(var == doctest::Approx(2.0709735e-21).epsilon(0.10));
}

/* ---- Welch estimation --------------------------------------------------- */

TEST_CASE("welch validation") {
  std::vector<double> x(1000, 0.0);
  CHECK_THROWS_AS(welch_psd(x, 0.0, 128, 0.5, WindowKind::Hann, SpectrumKind::ForcePsd),
                  Error);
  CHECK_THROWS_AS(welch_psd(x, 1.0, 2, 0.5, WindowKind::Hann, SpectrumKind::ForcePsd),
                  Error);
  CHECK_THROWS_AS(welch_psd(x, 1.0, 2048, 0.5, WindowKind::Hann, SpectrumKind::ForcePsd),
                  Error);
  CHECK_THROWS_AS(welch_psd(x, 1.0, 128, 0.95, WindowKind::Hann, SpectrumKind::ForcePsd),
                  Error);
}

TEST_CASE("welch grid runs from the first bin to Nyquist with DC dropped") {
  std::vector<double> x(4096, 1.0);
  const double dt = 0.25;
  const NoiseSpectrum s =
      welch_psd(x, dt, 512, 0.5, WindowKind::Hann, SpectrumKind::DisplacementPsd);
  CHECK(s.kind() == SpectrumKind::DisplacementPsd);
  REQUIRE(s.size() == 256);
  CHECK(s.freqs().front() == doctest::Approx(1.0 / (512.0 * dt)).epsilon(1e-15));
  CHECK(s.freqs().back() == doctest::Approx(2.0).epsilon(1e-15));  // Nyquist
  // A constant input leaks only into the bin adjacent to DC (the Hann window
  // is 0.5 - 0.25 e^{i 2 pi k/N} - 0.25 e^{-i 2 pi k/N}); beyond that, nothing.
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s.values()[i] <= 1e-20);
}

TEST_CASE("welch level and integral are calibrated on white noise") {
  const double sigma = 1.7, dt = 0.5;
  GaussianRng rng(11);
  std::vector<double> x(1u << 17);
  for (double& v : x) v = sigma * rng.normal();

  const NoiseSpectrum s =
      welch_psd(x, dt, 1024, 0.5, WindowKind::Hann, SpectrumKind::ForcePsd);
  const double expected = 2.0 * sigma * sigma * dt;

  double mean = 0.0;
  for (double v : s.values()) mean += v;
  mean /= static_cast<double>(s.size());
  CHECK(mean == doctest::Approx(expected).epsilon(0.02));

  // Parseval: integral of the one-sided PSD over the band gives the variance.
  const double df = 1.0 / (1024.0 * dt);
  double integral = 0.0;
  for (double v : s.values()) integral += v * df;
  double var = 0.0;
  for (double v : x) var += v * v;
  var /= static_cast<double>(x.size());
  CHECK(integral == doctest::Approx(var).epsilon(0.02));
}

TEST_CASE("welch recovers a sinusoid's power at the right bin") {
  const double dt = 0.1;
  const std::size_t len = 4096;
  const double amplitude = 3.0;
  const double f0 = 64.0 / (static_cast<double>(len) * dt);  // bin center
  std::vector<double> x(1u << 16);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = amplitude * std::sin(2.0 * kPi * f0 * static_cast<double>(i) * dt);

  const NoiseSpectrum s =
      welch_psd(x, dt, len, 0.5, WindowKind::Hann, SpectrumKind::DisplacementPsd);
  const double df = 1.0 / (static_cast<double>(len) * dt);
  double peak_power = 0.0;
  std::size_t peak_bin = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.values()[i] > peak_power) {
      peak_power = s.values()[i];
      peak_bin = i;
    }
  CHECK(s.freqs()[peak_bin] == doctest::Approx(f0).epsilon(1e-12));

  double integral = 0.0;
  for (std::size_t i = peak_bin >= 3 ? peak_bin - 3 : 0;
       i <= peak_bin + 3 && i < s.size(); ++i)
    integral += s.values()[i] * df;
  CHECK(integral == doctest::Approx(amplitude * amplitude / 2.0).epsilon(0.01));
}

/* ---- decomposition and decay fits ---------------------------------------- */

TEST_CASE("white plus 1/f decomposition is exact on noise-free data") {
  const double a = 2e-28, b = 1e-31;
  const auto f = log_freqs(1e-4, 1e-1, 40);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = a + b / f[i];
  const NoiseSpectrum s(f, v, SpectrumKind::AccelPsd);

  const WhiteColoredFit fit = decompose_white_plus_colored(s);
  CHECK(fit.exponent == -1.0);
  CHECK(fit.white_level == doctest::Approx(a).epsilon(1e-6));
  CHECK(fit.colored_coeff == doctest::Approx(b).epsilon(1e-6));
  CHECK(fit.residual < 1e-6);
}

TEST_CASE("decomposition clamps negative components to zero") {
  // Pure 1/f input: the white part must come back exactly zero, not negative.
  const auto f = log_freqs(1e-4, 1e-1, 30);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = 1e-31 / f[i];
  const WhiteColoredFit fit =
      decompose_white_plus_colored(NoiseSpectrum(f, v, SpectrumKind::AccelPsd));
  CHECK(fit.white_level >= 0.0);
  CHECK(fit.white_level < 1e-31);  // tiny against the colored term at band edge
  CHECK(fit.colored_coeff == doctest::Approx(1e-31).epsilon(1e-3));

  // Pure white input: colored part clamps to zero.
  std::vector<double> w(f.size(), 3e-29);
  const WhiteColoredFit wfit =
      decompose_white_plus_colored(NoiseSpectrum(f, w, SpectrumKind::AccelPsd));
  CHECK(wfit.colored_coeff == 0.0);
  CHECK(wfit.white_level == doctest::Approx(3e-29).epsilon(1e-9));
}

TEST_CASE("decomposition under averaged-bin statistics recovers the white level") {
  const double a = 2e-28, b = 1e-31;
  const auto f = log_freqs(1e-4, 1e-1, 60);
  const int n_avg = 200;  // chi^2 with 2*n_avg dof per bin
  GaussianRng rng(31);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double level = a + b / f[i];
    double acc = 0.0;
    for (int k = 0; k < 2 * n_avg; ++k) {
      const double g = rng.normal();
      acc += g * g;
    }
    v[i] = level * acc / (2.0 * n_avg);
  }
  const WhiteColoredFit fit =
      decompose_white_plus_colored(NoiseSpectrum(f, v, SpectrumKind::AccelPsd));
  CHECK(fit.white_level == doctest::Approx(a).epsilon(0.05));
  CHECK(fit.colored_coeff == doctest::Approx(b).epsilon(0.10));
}

TEST_CASE("free-exponent scan finds a non-default slope") {
  const double a = 1e-28, b = 3e-33;
  const auto f = log_freqs(1e-4, 1e-1, 50);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = a + b * std::pow(f[i], -1.3);
  const WhiteColoredFit fit = decompose_white_plus_colored(
      NoiseSpectrum(f, v, SpectrumKind::AccelPsd), true);
  CHECK(fit.exponent == doctest::Approx(-1.3).epsilon(0.04));
  CHECK(fit.white_level == doctest::Approx(a).epsilon(0.02));
}

TEST_CASE("decomposition preconditions") {
  // Less than a decade of span.
  const auto narrow = log_freqs(1e-3, 5e-3, 20);
  std::vector<double> v(narrow.size(), 1.0);
  try {
    decompose_white_plus_colored(NoiseSpectrum(narrow, v, SpectrumKind::AccelPsd));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }

  // Fewer than two bins with power.
  const auto f = log_freqs(1e-4, 1e-1, 10);
  std::vector<double> z(f.size(), 0.0);
  z[3] = 1e-30;
  try {
    decompose_white_plus_colored(NoiseSpectrum(f, z, SpectrumKind::AccelPsd));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericError);
  }
}

TEST_CASE("power-law decay fit is exact on exact data") {
  const double amplitude = 2.7e-29, exponent = -0.8;
  std::vector<BrownianRunRecord> runs;
  for (int i = 0; i < 10; ++i) {
    const double t = 50.0 * std::pow(10.0, i / 9.0);
    const double s = amplitude * std::pow(t, exponent);
    runs.push_back({t, s, 0.01 * s, ""});
  }
  const PowerLawFit fit = fit_powerlaw_decay(runs);
  CHECK(fit.exponent == doctest::Approx(exponent).epsilon(1e-10));
  CHECK(fit.amplitude == doctest::Approx(amplitude).epsilon(1e-9));

  // Identical relative errors: stderr = sigma_rel / sqrt(sum dx^2).
  double sxx = 0.0, xbar = 0.0;
  for (const auto& r : runs) xbar += std::log(r.t_days);
  xbar /= static_cast<double>(runs.size());
  for (const auto& r : runs) {
    const double dx = std::log(r.t_days) - xbar;
    sxx += dx * dx;
  }
  CHECK(fit.exponent_stderr == doctest::Approx(0.01 / std::sqrt(sxx)).epsilon(1e-9));
}

TEST_CASE("decay fit preconditions") {
  std::vector<BrownianRunRecord> two{{1.0, 1.0, 0.1, ""}, {2.0, 0.5, 0.05, ""}};
  CHECK_THROWS_AS(fit_powerlaw_decay(two), Error);

  std::vector<BrownianRunRecord> dup{
      {1.0, 1.0, 0.1, ""}, {1.0, 1.1, 0.1, ""}, {2.0, 0.5, 0.05, ""}};
  try {
    fit_powerlaw_decay(dup);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("distinct") != std::string::npos);
  }

  std::vector<BrownianRunRecord> bad{
      {1.0, 1.0, 0.0, ""}, {2.0, 0.5, 0.05, ""}, {3.0, 0.4, 0.04, ""}};
  CHECK_THROWS_AS(fit_powerlaw_decay(bad), Error);
}
