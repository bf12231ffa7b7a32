#include "core/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>

namespace cbound {

const char* spectrum_kind_name(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::AccelPsd: return "accel_psd";
    case SpectrumKind::ForcePsd: return "force_psd";
    case SpectrumKind::TorquePsd: return "torque_psd";
    case SpectrumKind::DisplacementPsd: return "displacement_psd";
    case SpectrumKind::AnglePsd: return "angle_psd";
  }
  return "unknown";
}

std::optional<SpectrumKind> spectrum_kind_from_name(std::string_view name) {
  for (auto kind : {SpectrumKind::AccelPsd, SpectrumKind::ForcePsd,
                    SpectrumKind::TorquePsd, SpectrumKind::DisplacementPsd,
                    SpectrumKind::AnglePsd})
    if (name == spectrum_kind_name(kind)) return kind;
  return std::nullopt;
}

NoiseSpectrum::NoiseSpectrum(std::vector<double> freqs, std::vector<double> values,
                             SpectrumKind kind)
    : freqs_(std::move(freqs)), values_(std::move(values)), kind_(kind) {
  if (freqs_.empty())
    throw Error(ErrorCode::InvalidArgument, "spectrum must have at least one bin");
  if (freqs_.size() != values_.size())
    throw Error(ErrorCode::InvalidArgument,
                "spectrum frequency and value arrays differ in length");
  double prev = 0.0;
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    if (!std::isfinite(freqs_[i]) || freqs_[i] <= prev) {
      std::ostringstream os;
      os << "frequencies must be positive, finite and strictly increasing "
            "(violated at index " << i << ")";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      std::ostringstream os;
      os << "PSD values must be finite and nonnegative (violated at index " << i << ")";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    prev = freqs_[i];
  }
}

double NoiseSpectrum::value_at(double f) const {
  if (!std::isfinite(f) || f < freqs_.front() || f > freqs_.back()) {
    std::ostringstream os;
    os << "frequency " << f << " Hz outside covered band [" << freqs_.front()
       << ", " << freqs_.back() << "] Hz";
    throw Error(ErrorCode::DomainError, os.str());
  }
  auto it = std::lower_bound(freqs_.begin(), freqs_.end(), f);
  std::size_t hi = static_cast<std::size_t>(it - freqs_.begin());
  if (freqs_[hi] == f) return values_[hi];
  std::size_t lo = hi - 1;
  const double t = (std::log(f) - std::log(freqs_[lo])) /
                   (std::log(freqs_[hi]) - std::log(freqs_[lo]));
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

std::complex<double> oscillator_susceptibility(const OscillatorParams& osc, double f) {
  if (!(osc.m_eff > 0) || !(osc.omega_m > 0) || !(osc.quality > 0))
    throw Error(ErrorCode::InvalidArgument,
                "oscillator parameters must be positive");
  if (!(f > 0))
    throw Error(ErrorCode::InvalidArgument, "frequency must be positive");
  const double omega = 2.0 * M_PI * f;
  const double w2 = osc.omega_m * osc.omega_m;
  const std::complex<double> denom(w2 - omega * omega, w2 / osc.quality);
  return 1.0 / (osc.m_eff * denom);
}

namespace {

constexpr std::size_t kKindCount = 5;

std::size_t kind_index(SpectrumKind k) { return static_cast<std::size_t>(k); }

// Per-frequency multiplicative transfer of one directed conversion edge.
using EdgeFactor = std::function<double(double f, const ConversionContext&)>;

struct Edge {
  SpectrumKind from;
  SpectrumKind to;
  EdgeFactor factor;
};

double require_mass(const ConversionContext& ctx) {
  if (!ctx.mass)
    throw Error(ErrorCode::MissingContext,
                "conversion between acceleration and force needs ConversionContext.mass");
  if (!(*ctx.mass > 0))
    throw Error(ErrorCode::InvalidArgument, "ConversionContext.mass must be positive");
  return *ctx.mass;
}

double require_lever(const ConversionContext& ctx) {
  if (!ctx.lever_arm)
    throw Error(ErrorCode::MissingContext,
                "torque and angle conversions need ConversionContext.lever_arm");
  if (!(*ctx.lever_arm > 0))
    throw Error(ErrorCode::InvalidArgument, "ConversionContext.lever_arm must be positive");
  return *ctx.lever_arm;
}

const OscillatorParams& require_oscillator(const ConversionContext& ctx) {
  if (!ctx.oscillator)
    throw Error(ErrorCode::MissingContext,
                "force<->displacement conversion needs ConversionContext.oscillator");
  return *ctx.oscillator;
}

double chi_sq(const ConversionContext& ctx, double f) {
  return std::norm(oscillator_susceptibility(require_oscillator(ctx), f));
}

// Differential acceleration of two masses read out against each other:
// S_da = 4 S_F / M^2, so each edge carries the full factor of four.
const std::array<Edge, 8>& edges() {
  static const std::array<Edge, 8> table = {{
      {SpectrumKind::AccelPsd, SpectrumKind::ForcePsd,
       [](double, const ConversionContext& c) { double m = require_mass(c); return m * m / 4.0; }},
      {SpectrumKind::ForcePsd, SpectrumKind::AccelPsd,
       [](double, const ConversionContext& c) { double m = require_mass(c); return 4.0 / (m * m); }},
      {SpectrumKind::ForcePsd, SpectrumKind::TorquePsd,
       [](double, const ConversionContext& c) { double l = require_lever(c); return l * l; }},
      {SpectrumKind::TorquePsd, SpectrumKind::ForcePsd,
       [](double, const ConversionContext& c) { double l = require_lever(c); return 1.0 / (l * l); }},
      {SpectrumKind::ForcePsd, SpectrumKind::DisplacementPsd,
       [](double f, const ConversionContext& c) { return chi_sq(c, f); }},
      {SpectrumKind::DisplacementPsd, SpectrumKind::ForcePsd,
       [](double f, const ConversionContext& c) { return 1.0 / chi_sq(c, f); }},
      {SpectrumKind::DisplacementPsd, SpectrumKind::AnglePsd,
       [](double, const ConversionContext& c) { double l = require_lever(c); return 1.0 / (l * l); }},
      {SpectrumKind::AnglePsd, SpectrumKind::DisplacementPsd,
       [](double, const ConversionContext& c) { double l = require_lever(c); return l * l; }},
  }};
  return table;
}

std::vector<const Edge*> shortest_path(SpectrumKind from, SpectrumKind to) {
  std::array<const Edge*, kKindCount> via{};
  std::array<bool, kKindCount> seen{};
  std::queue<SpectrumKind> frontier;
  frontier.push(from);
  seen[kind_index(from)] = true;
  while (!frontier.empty()) {
    SpectrumKind at = frontier.front();
    frontier.pop();
    if (at == to) break;
    for (const Edge& e : edges()) {
      if (e.from != at || seen[kind_index(e.to)]) continue;
      seen[kind_index(e.to)] = true;
      via[kind_index(e.to)] = &e;
      frontier.push(e.to);
    }
  }
  std::vector<const Edge*> path;
  for (SpectrumKind at = to; at != from;) {
    const Edge* e = via[kind_index(at)];
    if (!e)
      throw Error(ErrorCode::InvalidArgument, "no conversion path between spectrum kinds");
    path.push_back(e);
    at = e->from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NoiseSpectrum convert_spectrum(const NoiseSpectrum& spectrum, SpectrumKind target,
                               const ConversionContext& ctx) {
  if (spectrum.kind() == target) return spectrum;
  const auto path = shortest_path(spectrum.kind(), target);
  std::vector<double> out(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    double v = spectrum.values()[i];
    for (const Edge* e : path) v *= e->factor(spectrum.freqs()[i], ctx);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "conversion produced a non-finite value at f = " << spectrum.freqs()[i] << " Hz";
      throw Error(ErrorCode::NumericError, os.str());
    }
    out[i] = v;
  }
  return NoiseSpectrum(spectrum.freqs(), std::move(out), target);
}

NoiseSpectrum resample(const NoiseSpectrum& spectrum, std::span<const double> freqs) {
  std::vector<double> f(freqs.begin(), freqs.end());
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = spectrum.value_at(f[i]);
  return NoiseSpectrum(std::move(f), std::move(v), spectrum.kind());
}

}  // namespace cbound
