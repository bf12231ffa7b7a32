#include "core/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cbound {

double csl_r_valid_max(const TestMass& tm) {
  tm.validate();
  return tm.side / 10.0;
}

double csl_lambda_bound(double sa_white, const TestMass& tm, double r,
                        const PhysicalConstants& pc, RegimeStatus* status) {
  tm.validate();
  pc.validate();
  if (!std::isfinite(sa_white) || sa_white < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "acceleration PSD level must be finite and nonnegative");
  if (!std::isfinite(r) || r <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "correlation length r must be positive");
  if (r >= tm.side) {
    std::ostringstream os;
    os << "correlation length r = " << r << " m is not below the cube side b = "
       << tm.side << " m; inversion invalid (curves are truncated at r_valid_max = "
       << csl_r_valid_max(tm) << " m)";
    throw Error(ErrorCode::RegimeError, os.str());
  }
  if (r > csl_r_valid_max(tm) && status) {
    std::ostringstream os;
    os << "r = " << r << " m exceeds r_valid_max = " << csl_r_valid_max(tm)
       << " m; compact-limit inversion degrades, treat bound as approximate";
    status->raise(os.str());
  }
  const double m0_over_hbar = pc.m0 / pc.hbar;
  const double mass_over_rho = tm.mass / tm.density;
  return m0_over_hbar * m0_over_hbar / (32.0 * M_PI * r * r) *
         mass_over_rho * mass_over_rho * sa_white / (tm.side * tm.side);
}

double dp_sigma_bound(double sa_white, const TestMass& tm,
                      const PhysicalConstants& pc) {
  tm.validate();
  pc.validate();
  if (!std::isfinite(sa_white) || sa_white < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "acceleration PSD level must be finite and nonnegative");
  if (sa_white == 0.0)
    throw Error(ErrorCode::DomainError,
                "zero noise level gives an unbounded smearing length");
  const double cube = 2.0 * pc.hbar * pc.G / (3.0 * std::sqrt(M_PI)) *
                      tm.density / (tm.mass * sa_white);
  return tm.lattice_a * std::cbrt(cube);
}

void ExclusionCurve::validate() const {
  if (r.empty() || r.size() != lambda_max.size())
    throw Error(ErrorCode::InvalidArgument, "curve arrays empty or mismatched");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0) || !(lambda_max[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, "curve points must be positive");
    if (i > 0 && r[i] <= r[i - 1])
      throw Error(ErrorCode::InvalidArgument, "curve r values must be strictly increasing");
  }
  // Compact-limit inversion makes lambda r^2 a constant; enforce it so a
  // corrupted or hand-edited curve cannot masquerade as one of ours.
  const double c0 = lambda_max[0] * r[0] * r[0];
  for (std::size_t i = 1; i < r.size(); ++i) {
    const double ci = lambda_max[i] * r[i] * r[i];
    if (std::abs(ci - c0) > 1e-9 * c0)
      throw Error(ErrorCode::NumericError,
                  "curve violates the lambda r^2 = const invariant");
  }
}

ExclusionCurve exclusion_curve(double sa_white, const TestMass& tm,
                               std::span<const double> r_grid,
                               std::string source_label,
                               const PhysicalConstants& pc) {
  tm.validate();
  if (r_grid.empty())
    throw Error(ErrorCode::InvalidArgument, "empty r grid");
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    if (!(r_grid[i] > 0.0) || (i > 0 && r_grid[i] <= r_grid[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "r grid must be positive and strictly increasing");

  ExclusionCurve curve;
  curve.source_label = std::move(source_label);
  curve.r_valid_max = csl_r_valid_max(tm);
  for (double r : r_grid) {
    if (r > curve.r_valid_max) {
      ++curve.dropped;
      continue;
    }
    curve.r.push_back(r);
    curve.lambda_max.push_back(csl_lambda_bound(sa_white, tm, r, pc));
  }
  if (curve.r.empty()) {
    std::ostringstream os;
    os << "no grid point at or below r_valid_max = " << curve.r_valid_max << " m";
    throw Error(ErrorCode::DomainError, os.str());
  }
  if (curve.dropped > 0) {
    std::ostringstream os;
    os << "dropped " << curve.dropped << " grid point(s) above r_valid_max = "
       << curve.r_valid_max << " m";
    curve.report = os.str();
  }
  return curve;
}

bool excludes(const ExclusionCurve& curve, const CslParams& p) {
  curve.validate();
  p.validate();
  if (p.r_c < curve.r.front() || p.r_c > curve.r.back()) {
    std::ostringstream os;
    os << "r = " << p.r_c << " m outside curve range [" << curve.r.front()
       << ", " << curve.r.back() << "] m";
    throw Error(ErrorCode::DomainError, os.str());
  }
  auto it = std::lower_bound(curve.r.begin(), curve.r.end(), p.r_c);
  std::size_t hi = static_cast<std::size_t>(it - curve.r.begin());
  double limit;
  if (curve.r[hi] == p.r_c) {
    limit = curve.lambda_max[hi];
  } else {
    const std::size_t lo = hi - 1;
    const double t = (std::log(p.r_c) - std::log(curve.r[lo])) /
                     (std::log(curve.r[hi]) - std::log(curve.r[lo]));
    limit = std::exp(std::log(curve.lambda_max[lo]) +
                     t * (std::log(curve.lambda_max[hi]) - std::log(curve.lambda_max[lo])));
  }
  return p.lambda > limit;  // boundary itself stays allowed
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo))
    throw Error(ErrorCode::InvalidArgument, "log grid needs 0 < lo < hi");
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "log grid needs at least two points");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::span<const BenchmarkPoint> benchmark_points() {
  static const BenchmarkPoint table[] = {
      {"GRW", 1e-16, 1e-7, 0.0},
      {"Adler (r = 100 nm)", 1e-8, 1e-7, 2.0},
      {"Adler (r = 1 um)", 1e-6, 1e-6, 2.0},
  };
  return table;
}

}  // namespace cbound
