#pragma once

#include <span>
#include <string>

#include "core/spectrum.hpp"

namespace cbound {

struct WhiteColoredFit {
  double white_level;    // flat component level, PSD units
  double colored_coeff;  // coefficient of f^exponent, PSD units * Hz^-exponent
  double exponent;       // -1 unless the free-exponent variant was requested
  double residual;       // RMS of (S - fit)/fit over bins, dimensionless
};

// Nonnegative weighted least squares of S(f) = A + B f^p, p = -1 by default
// (free_exponent scans p instead, for diagnostics). Weights follow the
// chi-squared statistics of averaged periodogram bins (sigma proportional to
// the level), with one reweighting pass against the fitted model.
// Requires at least one decade of span and two bins carrying power.
WhiteColoredFit decompose_white_plus_colored(const NoiseSpectrum& s,
                                             bool free_exponent = false);

// One noise-level estimate from a science run.
struct BrownianRunRecord {
  double t_days;   // time since mission start
  double s_brown;  // white acceleration-noise level
  double sigma;    // 1-sigma uncertainty on s_brown, same units
  std::string label;

  void validate() const;
};

struct PowerLawFit {
  double exponent;
  double exponent_stderr;  // from the stated per-record uncertainties
  double amplitude;        // level at t = 1 (same units as s_brown)
};

// Weighted least squares of log S against log t with weights from the
// per-record uncertainties (sigma_logS = sigma/S). Needs >= 3 distinct t.
PowerLawFit fit_powerlaw_decay(std::span<const BrownianRunRecord> runs);

}  // namespace cbound
