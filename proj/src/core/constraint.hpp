#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/collapse.hpp"
#include "core/constants.hpp"
#include "core/test_mass.hpp"

namespace cbound {

// Largest correlation length at which the compact-limit geometry factor is
// trusted without qualification; exclusion curves truncate here.
double csl_r_valid_max(const TestMass& tm);

// Inverts a white differential-acceleration PSD level into the maximum
// localization rate compatible with it at correlation length r:
//   lambda_max = (m0^2 / (32 pi hbar^2 r^2)) (M/rho)^2 sa_white / b^2
// Exact inverse of csl_force_psd followed by force->accel conversion.
double csl_lambda_bound(double sa_white, const TestMass& tm, double r,
                        const PhysicalConstants& pc = {},
                        RegimeStatus* status = nullptr);

// Smallest smearing length compatible with the same PSD level:
//   sigma_min = a (2 hbar G rho / (3 sqrt(pi) M sa_white))^{1/3}
double dp_sigma_bound(double sa_white, const TestMass& tm,
                      const PhysicalConstants& pc = {});

// Monotone lambda_max(r) exclusion boundary. Points obey the exact
// lambda r^2 = const law of the compact-limit inversion.
struct ExclusionCurve {
  std::vector<double> r;           // m, strictly increasing
  std::vector<double> lambda_max;  // 1/s
  std::string source_label;
  double r_valid_max = 0.0;        // m, regime cutoff used to truncate
  std::size_t dropped = 0;         // grid points above the cutoff
  std::string report;              // human-readable note when dropped > 0

  void validate() const;
};

// Evaluates csl_lambda_bound over r_grid, dropping (and reporting) points
// above the regime cutoff. Fails if no grid point is usable.
ExclusionCurve exclusion_curve(double sa_white, const TestMass& tm,
                               std::span<const double> r_grid,
                               std::string source_label,
                               const PhysicalConstants& pc = {});

// True iff the model point lies strictly above the curve (log-log
// interpolation between nodes; points on the boundary stay allowed).
bool excludes(const ExclusionCurve& curve, const CslParams& p);

// n log-spaced values spanning [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

// Literature reference points overlaid on exclusion plots. The uncertainty
// is a symmetric half-width in decades on lambda.
struct BenchmarkPoint {
  const char* name;
  double lambda;                 // 1/s
  double r;                      // m
  double lambda_log10_halfwidth; // decades
};

std::span<const BenchmarkPoint> benchmark_points();

}  // namespace cbound
