#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace cbound {

// All spectra are one-sided PSDs on a strictly increasing positive frequency
// grid. Units follow the kind: accel (m/s^2)^2/Hz, force N^2/Hz, torque
// (N m)^2/Hz, displacement m^2/Hz, angle rad^2/Hz.
enum class SpectrumKind {
  AccelPsd,
  ForcePsd,
  TorquePsd,
  DisplacementPsd,
  AnglePsd,
};

const char* spectrum_kind_name(SpectrumKind kind);
std::optional<SpectrumKind> spectrum_kind_from_name(std::string_view name);

class NoiseSpectrum {
 public:
  NoiseSpectrum(std::vector<double> freqs, std::vector<double> values,
                SpectrumKind kind);

  const std::vector<double>& freqs() const noexcept { return freqs_; }
  const std::vector<double>& values() const noexcept { return values_; }
  SpectrumKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return freqs_.size(); }

  double f_min() const noexcept { return freqs_.front(); }
  double f_max() const noexcept { return freqs_.back(); }

  // Interpolates linearly in log-frequency; throws DomainError outside the
  // covered band (endpoints inclusive).
  double value_at(double f) const;

 private:
  std::vector<double> freqs_;
  std::vector<double> values_;
  SpectrumKind kind_;
};

// Torsion-pendulum mode parameters for force<->displacement conversion.
struct OscillatorParams {
  double m_eff;    // kg
  double omega_m;  // rad/s
  double quality;  // dimensionless
};

// chi(f) = 1 / (m_eff (omega_m^2 - omega^2 + i omega_m^2/Q)); the imaginary
// part is frequency independent (structural, not viscous, damping).
std::complex<double> oscillator_susceptibility(const OscillatorParams& osc, double f);

// Context for unit conversions. Only the fields needed by the requested
// conversion path have to be set; a missing one raises MissingContext.
struct ConversionContext {
  std::optional<double> mass;                 // kg, accel<->force (two-body differential readout)
  std::optional<double> lever_arm;            // m, force<->torque and displacement<->angle
  std::optional<OscillatorParams> oscillator; // force<->displacement
};

// Converts along the shortest path in the kind graph
//   accel -- force -- displacement -- angle
//              |
//            torque
// applying the per-frequency transfer factor of each edge.
NoiseSpectrum convert_spectrum(const NoiseSpectrum& spectrum, SpectrumKind target,
                               const ConversionContext& ctx = {});

// Evaluates the spectrum on a new grid (log-linear interpolation). Every
// requested frequency must lie inside the covered band.
NoiseSpectrum resample(const NoiseSpectrum& spectrum, std::span<const double> freqs);

}  // namespace cbound
