#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/errors.hpp"

namespace cbound {

// Fixed, platform-independent normal generator: mt19937_64 driving a basic
// Box-Muller transform. std::normal_distribution is implementation-defined,
// which would break bit-reproducibility across standard libraries.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in (0, 1]; never returns 0 so log() below stays finite.
  double uniform();
  double normal();

 private:
  std::uint64_t next_word();

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Identifier written into artifacts so a reader knows how to reproduce runs.
inline constexpr const char* prng_id = "mt19937_64-box-muller";

struct SimulationParams {
  double m_eff;      // kg
  double omega_m;    // rad/s
  double quality;    // dimensionless
  double force_psd;  // one-sided white force PSD, N^2/Hz
  double dt;         // s
  std::uint64_t n;   // samples, >= 2^14
  std::uint64_t seed;

  void validate() const;
};

// Position samples x_k at t = (k+1) dt and the zero-order-hold force F_k
// applied over [k dt, (k+1) dt). Initial conditions are x = v = 0.
struct SimulationRun {
  SimulationParams params;
  std::vector<double> position;  // m
  std::vector<double> force;     // N
};

// Integrates x'' + (omega_m/Q) x' + omega_m^2 x = F/M_eff with white
// Gaussian F of the given one-sided PSD (viscous damping; the budget's
// structural damping coincides with it at f >> omega_m where the oracle
// comparisons run). Velocity-Verlet with semi-implicit velocity update.
SimulationRun simulate_oscillator(const SimulationParams& params);

}  // namespace cbound
