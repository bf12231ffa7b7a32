#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/constants.hpp"
#include "core/test_mass.hpp"

namespace cbound {

// Resolved configuration: profile defaults with file overrides applied and
// referenced spectra ingested. `canonical` is a normalized serialization of
// every resolved value; its FNV-1a hash stamps output artifacts.
struct ConfigDocument {
  std::optional<std::string> profile;
  TestMass mass;
  std::optional<DeviceConfig> device;
  PhysicalConstants consts;
  std::vector<std::string> provenance;  // leading comment block of the file
  std::string canonical;
  std::string hash_hex;
};

// Grammar: optional leading '#' provenance comments, an optional top-level
//   profile = "<name>"
// then [mass] / [device] / [constants] sections of key = value lines.
// Dimensioned values require a unit suffix ("46 mm", "1 mHz"); unknown keys,
// missing units and wrong units fail with line/column positions.
ConfigDocument load_config(const std::string& path);

// Built-in profiles: "table1" (reference dual-balance instrument, mass and
// device) and "lpf" (space-interferometry test mass only).
ConfigDocument config_from_profile(const std::string& name);

TestMass profile_mass(const std::string& name);

}  // namespace cbound
