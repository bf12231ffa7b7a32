#pragma once

#include <string>

#include "core/constants.hpp"
#include "core/test_mass.hpp"

namespace cbound {

// Soft diagnostics from model evaluation. A set warning means the result was
// produced but the inputs sit outside the regime where the closed forms are
// accurate; callers decide whether to surface it.
struct RegimeStatus {
  bool warning = false;
  std::string message;

  void raise(const std::string& msg) {
    warning = true;
    if (!message.empty()) message += "; ";
    message += msg;
  }
};

// Dimensionless localization geometry factor of a cube in the compact limit
// r << b: 8 pi rho^2 r^4 / (b^2 m0^2). Warns for r > b/10, fails for r >= b.
double csl_geometry_factor(const TestMass& tm, double r,
                           const PhysicalConstants& pc = {},
                           RegimeStatus* status = nullptr);

// White one-sided force PSD of the localization noise on the cube:
//   S_F = lambda (hbar/r)^2 * csl_geometry_factor * b^4
//       = 8 pi lambda hbar^2 rho^2 r^2 b^2 / m0^2    [N^2/Hz]
// The b^4 restores the length dimensions the compact-limit factor drops.
double csl_force_psd(const CslParams& p, const TestMass& tm,
                     const PhysicalConstants& pc = {},
                     RegimeStatus* status = nullptr);

// White one-sided force PSD of gravitationally induced decoherence noise:
//   S_F = (G hbar / (6 sqrt(pi))) * (a/sigma)^3 * M * rho   [N^2/Hz]
double dp_force_psd(const DpParams& p, const TestMass& tm,
                    const PhysicalConstants& pc = {});

}  // namespace cbound
