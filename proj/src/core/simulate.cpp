#include "core/simulate.hpp"

#include <cmath>
#include <sstream>

namespace cbound {

std::uint64_t GaussianRng::next_word() { return eng_(); }

double GaussianRng::uniform() {
  // 53-bit mantissa from the top bits, mapped to (0, 1].
  const std::uint64_t r = next_word() >> 11;
  return (static_cast<double>(r) + 1.0) * 0x1p-53;
}

double GaussianRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

void SimulationParams::validate() const {
  if (!(m_eff > 0) || !(omega_m > 0) || !(quality > 0))
    throw Error(ErrorCode::InvalidArgument,
                "oscillator parameters must be positive");
  if (!std::isfinite(force_psd) || force_psd < 0)
    throw Error(ErrorCode::InvalidArgument,
                "force_psd must be finite and nonnegative");
  if (!(dt > 0))
    throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (!(dt * omega_m < 0.1)) {
    std::ostringstream os;
    os << "dt*omega_m = " << dt * omega_m
       << " does not resolve the oscillation; need dt*omega_m < 0.1";
    throw Error(ErrorCode::DomainError, os.str());
  }
  if (n < (1u << 14)) {
    std::ostringstream os;
    os << "n = " << n << " below the minimum of 16384 samples";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

SimulationRun simulate_oscillator(const SimulationParams& params) {
  params.validate();

  SimulationRun run;
  run.params = params;
  run.position.resize(params.n);
  run.force.resize(params.n);

  GaussianRng rng(params.seed);
  // One-sided S_F equals a two-sided density S_F/2; a zero-order-hold
  // sequence reproducing it needs variance (S_F/2)/dt per step.
  const double sigma_f = std::sqrt(params.force_psd / (2.0 * params.dt));
  const double w2 = params.omega_m * params.omega_m;
  const double gamma = params.omega_m / params.quality;
  const double dt = params.dt;
  const double inv_m = 1.0 / params.m_eff;

  double x = 0.0, v = 0.0;
  for (std::uint64_t k = 0; k < params.n; ++k) {
    const double f = sigma_f * rng.normal();
    const double a0 = f * inv_m - w2 * x - gamma * v;
    const double x1 = x + v * dt + 0.5 * a0 * dt * dt;
    // Implicit velocity update keeps the damping term stable.
    const double v1 = (v + 0.5 * dt * (a0 + f * inv_m - w2 * x1)) /
                      (1.0 + 0.5 * dt * gamma);
    x = x1;
    v = v1;
    run.position[k] = x;
    run.force[k] = f;
  }
  return run;
}

}  // namespace cbound
