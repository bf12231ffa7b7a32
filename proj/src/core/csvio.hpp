#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/budget.hpp"
#include "core/constraint.hpp"
#include "core/fits.hpp"
#include "core/simulate.hpp"
#include "core/spectrum.hpp"

namespace cbound {

// Metadata stamped into every artifact header. Deliberately excludes
// timestamps and filesystem paths so identical inputs produce identical
// bytes.
struct ArtifactMeta {
  std::string config_hash;           // hex of the resolved inputs, may be empty
  std::optional<std::uint64_t> seed; // stochastic artifacts only
  std::string prng;                  // recorded alongside seed
  std::vector<std::string> notes;
};

// Shortest-exact decimal serialization used across all artifacts (%.17g
// round-trips IEEE doubles through strtod).
std::string format_g17(double v);

std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex16(std::uint64_t v);

// Write-temp-rename; fails atomically with IoError.
void atomic_write_file(const std::string& path, const std::string& content);

void write_spectrum_csv(const std::string& path, const NoiseSpectrum& s,
                        const ArtifactMeta& meta);
NoiseSpectrum read_spectrum_csv(const std::string& path);

void write_curve_csv(const std::string& path, const ExclusionCurve& curve,
                     const ArtifactMeta& meta);

void write_budget_csv(const std::string& path, const BudgetReport& report,
                      const ArtifactMeta& meta);

void write_run_csv(const std::string& path, const SimulationRun& run,
                   const ArtifactMeta& meta);

// Time series read back from a run artifact (or a user-provided file with
// the same columns). force is empty when the file has no force column.
struct RunSeries {
  double dt = 0.0;
  std::vector<double> time;
  std::vector<double> position;
  std::vector<double> force;
};

RunSeries read_run_csv(const std::string& path);

std::vector<BrownianRunRecord> read_runs_csv(const std::string& path);

}  // namespace cbound
