#include "core/collapse.hpp"

#include <cmath>
#include <sstream>

namespace cbound {

double csl_geometry_factor(const TestMass& tm, double r,
                           const PhysicalConstants& pc, RegimeStatus* status) {
  tm.validate();
  pc.validate();
  if (!std::isfinite(r) || r <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "correlation length r must be positive");
  if (r >= tm.side) {
    std::ostringstream os;
    os << "correlation length r = " << r << " m is not below the cube side b = "
       << tm.side << " m; the compact-limit geometry factor does not apply";
    throw Error(ErrorCode::RegimeError, os.str());
  }
  if (r > tm.side / 10.0 && status) {
    std::ostringstream os;
    os << "r = " << r << " m exceeds b/10 = " << tm.side / 10.0
       << " m; compact-limit factor degrades, treat results as approximate";
    status->raise(os.str());
  }
  const double rho_over_m0 = tm.density / pc.m0;
  const double r2 = r * r;
  return 8.0 * M_PI * rho_over_m0 * rho_over_m0 * r2 * r2 / (tm.side * tm.side);
}

double csl_force_psd(const CslParams& p, const TestMass& tm,
                     const PhysicalConstants& pc, RegimeStatus* status) {
  p.validate();
  if (p.lambda == 0.0) {
    // Keep regime checks active even for the trivial level.
    (void)csl_geometry_factor(tm, p.r_c, pc, status);
    return 0.0;
  }
  const double alpha = csl_geometry_factor(tm, p.r_c, pc, status);
  const double hbar_over_r = pc.hbar / p.r_c;
  const double b2 = tm.side * tm.side;
  return p.lambda * hbar_over_r * hbar_over_r * alpha * (b2 * b2);
}

double dp_force_psd(const DpParams& p, const TestMass& tm,
                    const PhysicalConstants& pc) {
  p.validate();
  tm.validate();
  pc.validate();
  const double a_over_sigma = tm.lattice_a / p.sigma;
  return pc.G * pc.hbar / (6.0 * std::sqrt(M_PI)) *
         a_over_sigma * a_over_sigma * a_over_sigma * tm.mass * tm.density;
}

}  // namespace cbound
