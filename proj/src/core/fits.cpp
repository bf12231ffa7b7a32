#include "core/fits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace cbound {

namespace {

struct TwoParamFit {
  double a = 0.0;
  double b = 0.0;
  double weighted_sse = 0.0;
};

// Nonnegative WLS of S = a + b*phi for fixed basis phi. Negative solutions
// collapse onto the admissible axis (active-set step for a 2-parameter cone).
TwoParamFit solve_clamped(const std::vector<double>& s,
                          const std::vector<double>& phi,
                          const std::vector<double>& w) {
  double sw = 0, swp = 0, swpp = 0, sws = 0, swps = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sw += w[i];
    swp += w[i] * phi[i];
    swpp += w[i] * phi[i] * phi[i];
    sws += w[i] * s[i];
    swps += w[i] * phi[i] * s[i];
  }
  const double det = sw * swpp - swp * swp;
  if (!(std::abs(det) > 1e-14 * sw * swpp))
    throw Error(ErrorCode::NumericError,
                "decomposition basis is degenerate on this grid");
  TwoParamFit fit;
  fit.a = (sws * swpp - swps * swp) / det;
  fit.b = (sw * swps - swp * sws) / det;
  if (fit.a < 0.0) {
    fit.a = 0.0;
    fit.b = swpp > 0 ? std::max(0.0, swps / swpp) : 0.0;
  } else if (fit.b < 0.0) {
    fit.b = 0.0;
    fit.a = sw > 0 ? std::max(0.0, sws / sw) : 0.0;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double r = s[i] - fit.a - fit.b * phi[i];
    fit.weighted_sse += w[i] * r * r;
  }
  return fit;
}

// Two WLS passes: data-driven weights first, then weights from the fitted
// model (chi-squared bins have sigma ~ level, so w = 1/level^2).
TwoParamFit fit_fixed_exponent(const std::vector<double>& s,
                               const std::vector<double>& phi, double floor) {
  std::vector<double> w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double lvl = std::max(s[i], floor);
    w[i] = 1.0 / (lvl * lvl);
  }
  TwoParamFit fit = solve_clamped(s, phi, w);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double lvl = std::max(fit.a + fit.b * phi[i], floor);
    w[i] = 1.0 / (lvl * lvl);
  }
  return solve_clamped(s, phi, w);
}

std::vector<double> power_basis(const std::vector<double>& f, double p) {
  std::vector<double> phi(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) phi[i] = std::pow(f[i], p);
  return phi;
}

}  // namespace

WhiteColoredFit decompose_white_plus_colored(const NoiseSpectrum& s,
                                             bool free_exponent) {
  const auto& f = s.freqs();
  const auto& v = s.values();
  if (!(f.back() / f.front() >= 10.0)) {
    std::ostringstream os;
    os << "spectrum spans only " << f.back() / f.front()
       << "x in frequency; need at least one decade to separate components";
    throw Error(ErrorCode::DomainError, os.str());
  }
  std::size_t powered = 0;
  double vmax = 0.0;
  for (double x : v) {
    if (x > 0.0) ++powered;
    vmax = std::max(vmax, x);
  }
  if (powered < 2)
    throw Error(ErrorCode::NumericError,
                "fewer than two bins carry power; fit is ill-conditioned");
  const double floor = vmax > 0 ? 1e-12 * vmax : 1.0;

  WhiteColoredFit out{};
  if (!free_exponent) {
    const auto phi = power_basis(f, -1.0);
    const TwoParamFit fit = fit_fixed_exponent(v, phi, floor);
    out.white_level = fit.a;
    out.colored_coeff = fit.b;
    out.exponent = -1.0;
    // Weights are ~1/level^2, so this is an RMS of (S - fit)/fit.
    out.residual = std::sqrt(fit.weighted_sse / static_cast<double>(v.size()));
    return out;
  }

  // Diagnostic variant: coarse-to-fine scan of the colored exponent,
  // ranking by the relative (model-weighted) misfit.
  double best_p = -1.0, best_sse = std::numeric_limits<double>::infinity();
  TwoParamFit best_fit;
  auto consider = [&](double p) {
    const auto phi = power_basis(f, p);
    TwoParamFit fit;
    try {
      fit = fit_fixed_exponent(v, phi, floor);
    } catch (const Error&) {
      return;  // degenerate basis at this exponent; skip
    }
    if (fit.weighted_sse < best_sse) {
      best_sse = fit.weighted_sse;
      best_p = p;
      best_fit = fit;
    }
  };
  for (int i = 0; i <= 140; ++i) consider(-3.0 + 0.02 * i);
  const double center = best_p;
  for (int i = -10; i <= 10; ++i) consider(center + 0.002 * i);
  if (!std::isfinite(best_sse))
    throw Error(ErrorCode::NumericError, "exponent scan found no usable fit");
  out.white_level = best_fit.a;
  out.colored_coeff = best_fit.b;
  out.exponent = best_p;
  out.residual = std::sqrt(best_fit.weighted_sse / static_cast<double>(v.size()));
  return out;
}

void BrownianRunRecord::validate() const {
  if (!std::isfinite(t_days) || t_days <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "record time must be positive");
  if (!std::isfinite(s_brown) || s_brown <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "record noise level must be positive");
  if (!std::isfinite(sigma) || sigma <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "record uncertainty must be positive");
}

PowerLawFit fit_powerlaw_decay(std::span<const BrownianRunRecord> runs) {
  if (runs.size() < 3)
    throw Error(ErrorCode::InvalidArgument, "need at least three records");
  std::set<double> distinct;
  for (const auto& rec : runs) {
    rec.validate();
    distinct.insert(rec.t_days);
  }
  if (distinct.size() < 3)
    throw Error(ErrorCode::InvalidArgument,
                "need at least three records with distinct times");

  // ln S = intercept + exponent ln t, sigma_lnS = sigma/S.
  double sw = 0, swx = 0, swy = 0;
  for (const auto& rec : runs) {
    const double sy = rec.sigma / rec.s_brown;
    const double w = 1.0 / (sy * sy);
    sw += w;
    swx += w * std::log(rec.t_days);
    swy += w * std::log(rec.s_brown);
  }
  const double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0, sxy = 0;
  for (const auto& rec : runs) {
    const double sy = rec.sigma / rec.s_brown;
    const double w = 1.0 / (sy * sy);
    const double dx = std::log(rec.t_days) - xbar;
    sxx += w * dx * dx;
    sxy += w * dx * (std::log(rec.s_brown) - ybar);
  }
  if (!(sxx > 0))
    throw Error(ErrorCode::NumericError, "no time spread in records");

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.exponent_stderr = std::sqrt(1.0 / sxx);  // known per-record sigmas
  fit.amplitude = std::exp(ybar - fit.exponent * xbar);
  return fit;
}

}  // namespace cbound
