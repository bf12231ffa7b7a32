#include "core/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "core/csvio.hpp"

namespace cbound {

namespace {

struct UnitTable {
  const char* dimension;
  std::vector<std::pair<const char*, double>> factors;
};

const UnitTable kMassUnits{"mass", {{"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6}}};
const UnitTable kDensityUnits{"density", {{"kg/m^3", 1.0}, {"g/cm^3", 1e3}}};
const UnitTable kLengthUnits{"length",
                             {{"m", 1.0},
                              {"cm", 1e-2},
                              {"mm", 1e-3},
                              {"um", 1e-6},
                              {"nm", 1e-9},
                              {"pm", 1e-12},
                              {"fm", 1e-15},
                              {"angstrom", 1e-10}}};
const UnitTable kFrequencyUnits{
    "frequency", {{"Hz", 1.0}, {"mHz", 1e-3}, {"uHz", 1e-6}, {"kHz", 1e3}}};
const UnitTable kAngularRateUnits{"angular rate", {{"rad/s", 1.0}}};
const UnitTable kTemperatureUnits{"temperature", {{"K", 1.0}, {"mK", 1e-3}}};
const UnitTable kPressureUnits{"pressure",
                               {{"Pa", 1.0},
                                {"mPa", 1e-3},
                                {"uPa", 1e-6},
                                {"nPa", 1e-9},
                                {"hPa", 1e2},
                                {"kPa", 1e3},
                                {"mbar", 1e2},
                                {"bar", 1e5}}};
const UnitTable kPowerUnits{"power",
                            {{"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}, {"nW", 1e-9}}};

struct Entry {
  std::string value;
  int line;
  int col;  // 1-based column of the value
};

struct ParsedFile {
  std::optional<std::string> profile;
  int profile_line = 0;
  // section -> key -> entry, insertion-ordered per section for messages
  std::map<std::string, std::map<std::string, Entry>> sections;
  std::vector<std::string> provenance;
};

[[noreturn]] void fail_at(const std::string& msg, int line, int col) {
  throw Error(ErrorCode::ParseError, msg, line, col);
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

ParsedFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open config '" + path + "'");
  ParsedFile out;
  std::string line;
  int line_no = 0;
  std::string section;
  bool in_preamble = true;
  static const std::set<std::string> kKnownSections{"mass", "device", "constants"};
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') {
      if (in_preamble) out.provenance.push_back(strip(stripped.substr(1)));
      continue;
    }
    in_preamble = false;
    if (stripped[0] == '[') {
      if (stripped.back() != ']')
        fail_at("unterminated section header", line_no, 1);
      section = strip(stripped.substr(1, stripped.size() - 2));
      if (!kKnownSections.count(section))
        fail_at("unknown section '" + section + "'", line_no, 1);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail_at("expected 'key = value'", line_no, 1);
    const std::string key = strip(line.substr(0, eq));
    if (key.empty()) fail_at("empty key", line_no, 1);
    std::string value = line.substr(eq + 1);
    // Trailing comments are allowed after the value.
    const auto hash = value.find('#');
    if (hash != std::string::npos) value = value.substr(0, hash);
    const std::string value_str = strip(value);
    if (value_str.empty()) fail_at("missing value for '" + key + "'", line_no, 1);
    int value_col = static_cast<int>(eq + 2);
    {
      std::size_t p = eq + 1;
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
      value_col = static_cast<int>(p + 1);
    }
    const int key_col = static_cast<int>(line.find_first_not_of(" \t") + 1);
    if (section.empty()) {
      if (key == "profile") {
        if (out.profile) fail_at("duplicate 'profile'", line_no, key_col);
        out.profile = unquote(value_str);
        out.profile_line = line_no;
        continue;
      }
      fail_at("unknown top-level key '" + key + "' (only 'profile' may appear "
              "before a section)", line_no, key_col);
    }
    auto& sec = out.sections[section];
    if (sec.count(key))
      fail_at("duplicate key '" + key + "' in [" + section + "]", line_no, key_col);
    sec[key] = Entry{value_str, line_no, value_col};
  }
  return out;
}

double number_with_unit(const Entry& e, const UnitTable& table, bool unit_required,
                        const std::string& key) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin)
    fail_at("expected a number for '" + key + "'", e.line, e.col);
  std::string unit = strip(std::string(end));
  if (unit.empty()) {
    if (!unit_required) return v;
    std::ostringstream os;
    os << "'" << key << "' needs a " << table.dimension << " unit (one of:";
    for (const auto& [name, _] : table.factors) os << ' ' << name;
    os << ")";
    fail_at(os.str(), e.line, e.col);
  }
  for (const auto& [name, factor] : table.factors)
    if (unit == name) return v * factor;
  std::ostringstream os;
  os << "'" << unit << "' is not a " << table.dimension << " unit valid for '"
     << key << "' (one of:";
  for (const auto& [name, _] : table.factors) os << ' ' << name;
  os << ")";
  fail_at(os.str(), e.line, e.col);
}

double bare_number(const Entry& e, const std::string& key) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || !strip(std::string(end)).empty())
    fail_at("expected a plain number for '" + key + "'", e.line, e.col);
  return v;
}

// Dimensionless by convention, but tolerate the stated unit spelling.
double number_allow_unit(const Entry& e, const UnitTable& table,
                         const std::string& key) {
  return number_with_unit(e, table, false, key);
}

NoiseSpectrum load_spectrum_relative(const std::string& config_path,
                                     const std::string& file, SpectrumKind want,
                                     const Entry& e, const std::string& key) {
  namespace fs = std::filesystem;
  fs::path p(file);
  if (p.is_relative()) p = fs::path(config_path).parent_path() / p;
  NoiseSpectrum s = read_spectrum_csv(p.string());
  if (s.kind() != want) {
    std::ostringstream os;
    os << "'" << key << "' must reference a " << spectrum_kind_name(want)
       << " spectrum, got " << spectrum_kind_name(s.kind());
    fail_at(os.str(), e.line, e.col);
  }
  return s;
}

std::string spectrum_content_hash(const std::string& config_path,
                                  const std::string& file) {
  namespace fs = std::filesystem;
  fs::path p(file);
  if (p.is_relative()) p = fs::path(config_path).parent_path() / p;
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return to_hex16(fnv1a64(ss.str()));
}

void apply_mass_section(const std::map<std::string, Entry>& sec,
                        std::optional<double>& mass, std::optional<double>& density,
                        std::optional<double>& side, std::optional<double>& lattice) {
  for (const auto& [key, e] : sec) {
    if (key == "mass") mass = number_with_unit(e, kMassUnits, true, key);
    else if (key == "density") density = number_with_unit(e, kDensityUnits, true, key);
    else if (key == "side") side = number_with_unit(e, kLengthUnits, true, key);
    else if (key == "lattice") lattice = number_with_unit(e, kLengthUnits, true, key);
    else fail_at("unknown key '" + key + "' in [mass]", e.line, e.col);
  }
}

}  // namespace

TestMass profile_mass(const std::string& name) {
  if (name == "table1") return DeviceConfig::default_test_mass();
  if (name == "lpf")
    return TestMass{1.928, 19881.0, 0.046, constants::lattice_au_pt};
  throw Error(ErrorCode::InvalidArgument,
              "unknown profile '" + name + "' (available: table1, lpf)");
}

namespace {

ConfigDocument resolve(const ParsedFile& file, const std::string& path) {
  ConfigDocument doc;
  doc.provenance = file.provenance;
  doc.profile = file.profile;

  std::optional<double> mass, density, side, lattice;
  bool device_requested = file.sections.count("device") > 0;

  if (file.profile) {
    TestMass base;
    try {
      base = profile_mass(*file.profile);
    } catch (const Error& e) {
      fail_at(e.what(), file.profile_line, 1);
    }
    mass = base.mass;
    density = base.density;
    side = base.side;
    lattice = base.lattice_a;
    if (*file.profile == "table1") device_requested = true;
  }

  if (auto it = file.sections.find("mass"); it != file.sections.end())
    apply_mass_section(it->second, mass, density, side, lattice);

  auto require = [&](const std::optional<double>& v, const char* key) {
    if (!v) {
      std::ostringstream os;
      os << "missing required key '" << key
         << "' in [mass] (no profile supplies it)";
      throw Error(ErrorCode::ParseError, os.str());
    }
    return *v;
  };
  doc.mass = TestMass{require(mass, "mass"), require(density, "density"),
                      require(side, "side"), require(lattice, "lattice")};
  try {
    doc.mass.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": [mass] invalid: " + e.what());
  }

  std::string seismic_hash, newtonian_hash;
  if (device_requested) {
    DeviceConfig dev;
    dev.tm = doc.mass;
    if (auto it = file.sections.find("device"); it != file.sections.end()) {
      bool saw_resonance = false, saw_omega = false;
      for (const auto& [key, e] : it->second) {
        if (key == "arm_length") dev.arm_length = number_with_unit(e, kLengthUnits, true, key);
        else if (key == "resonance") {
          dev.omega_m = 2.0 * M_PI * number_with_unit(e, kFrequencyUnits, true, key);
          saw_resonance = true;
        } else if (key == "omega_m") {
          dev.omega_m = number_with_unit(e, kAngularRateUnits, true, key);
          saw_omega = true;
        } else if (key == "quality") dev.quality = bare_number(e, key);
        else if (key == "temperature") dev.temperature = number_with_unit(e, kTemperatureUnits, true, key);
        else if (key == "temperature_asd") dev.temperature_asd = number_allow_unit(e, kTemperatureUnits, key);
        else if (key == "pressure") dev.air_pressure = number_with_unit(e, kPressureUnits, true, key);
        else if (key == "laser_power") dev.laser_power = number_with_unit(e, kPowerUnits, true, key);
        else if (key == "wavelength") dev.laser_wavelength = number_with_unit(e, kLengthUnits, true, key);
        else if (key == "rin_1mhz") dev.rin_1mhz = bare_number(e, key);
        else if (key == "freq_noise_1mhz") dev.freq_noise_1mhz = number_allow_unit(e, kFrequencyUnits, key);
        else if (key == "alpha_e") dev.alpha_e = bare_number(e, key);
        else if (key == "cmrr_seismic") dev.cmrr_seismic = bare_number(e, key);
        else if (key == "cm_residual_thermo") dev.cm_residual_thermo = bare_number(e, key);
        else if (key == "rin_suppression") dev.rin_suppression = bare_number(e, key);
        else if (key == "arm_mismatch") dev.arm_mismatch = number_with_unit(e, kLengthUnits, true, key);
        else if (key == "gas_molecule_mass") dev.gas_molecule_mass = number_with_unit(e, kMassUnits, true, key);
        else if (key == "shot_noise_asd") dev.shot_noise_asd = number_allow_unit(e, kLengthUnits, key);
        else if (key == "seismic_rotation_file") {
          const std::string f = unquote(e.value);
          dev.seismic_rotation = load_spectrum_relative(path, f, SpectrumKind::AnglePsd, e, key);
          seismic_hash = spectrum_content_hash(path, f);
        } else if (key == "newtonian_file") {
          const std::string f = unquote(e.value);
          dev.newtonian = load_spectrum_relative(path, f, SpectrumKind::ForcePsd, e, key);
          newtonian_hash = spectrum_content_hash(path, f);
        } else fail_at("unknown key '" + key + "' in [device]", e.line, e.col);
      }
      if (saw_resonance && saw_omega) {
        const Entry& e = it->second.at("omega_m");
        fail_at("give either 'resonance' or 'omega_m', not both", e.line, e.col);
      }
    }
    try {
      dev.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, path + ": [device] invalid: " + e.what());
    }
    doc.device = std::move(dev);
  }

  if (auto it = file.sections.find("constants"); it != file.sections.end()) {
    for (const auto& [key, e] : it->second) {
      if (key == "m0") {
        const std::string v = unquote(e.value);
        if (v == "amu") doc.consts.m0 = constants::amu;
        else if (v == "proton") doc.consts.m0 = constants::m_proton;
        else doc.consts.m0 = number_with_unit(e, kMassUnits, true, key);
      } else {
        fail_at("unknown key '" + key + "' in [constants]", e.line, e.col);
      }
    }
    doc.consts.validate();
  }

  // Canonical form: resolved SI values, fixed order, %.17g. Ingested
  // spectra contribute content hashes so data edits change the hash.
  std::ostringstream canon;
  canon << "profile=" << (doc.profile ? *doc.profile : "") << ';';
  canon << "mass.mass=" << format_g17(doc.mass.mass) << ';'
        << "mass.density=" << format_g17(doc.mass.density) << ';'
        << "mass.side=" << format_g17(doc.mass.side) << ';'
        << "mass.lattice=" << format_g17(doc.mass.lattice_a) << ';';
  canon << "constants.m0=" << format_g17(doc.consts.m0) << ';';
  if (doc.device) {
    const DeviceConfig& d = *doc.device;
    canon << "device.arm_length=" << format_g17(d.arm_length) << ';'
          << "device.omega_m=" << format_g17(d.omega_m) << ';'
          << "device.quality=" << format_g17(d.quality) << ';'
          << "device.temperature=" << format_g17(d.temperature) << ';'
          << "device.temperature_asd=" << format_g17(d.temperature_asd) << ';'
          << "device.pressure=" << format_g17(d.air_pressure) << ';'
          << "device.laser_power=" << format_g17(d.laser_power) << ';'
          << "device.wavelength=" << format_g17(d.laser_wavelength) << ';'
          << "device.rin_1mhz=" << format_g17(d.rin_1mhz) << ';'
          << "device.freq_noise_1mhz=" << format_g17(d.freq_noise_1mhz) << ';'
          << "device.alpha_e=" << format_g17(d.alpha_e) << ';'
          << "device.cmrr_seismic=" << format_g17(d.cmrr_seismic) << ';'
          << "device.cm_residual_thermo=" << format_g17(d.cm_residual_thermo) << ';'
          << "device.rin_suppression=" << format_g17(d.rin_suppression) << ';'
          << "device.arm_mismatch=" << format_g17(d.arm_mismatch) << ';'
          << "device.gas_molecule_mass=" << format_g17(d.gas_molecule_mass) << ';'
          << "device.shot_noise_asd=" << format_g17(d.shot_noise_asd) << ';';
    if (!seismic_hash.empty()) canon << "device.seismic_rotation=" << seismic_hash << ';';
    if (!newtonian_hash.empty()) canon << "device.newtonian=" << newtonian_hash << ';';
  }
  doc.canonical = canon.str();
  doc.hash_hex = to_hex16(fnv1a64(doc.canonical));
  return doc;
}

}  // namespace

ConfigDocument load_config(const std::string& path) {
  return resolve(parse_file(path), path);
}

ConfigDocument config_from_profile(const std::string& name) {
  profile_mass(name);  // unknown names fail as InvalidArgument, not ParseError
  ParsedFile synthetic;
  synthetic.profile = name;
  ConfigDocument doc = resolve(synthetic, "<builtin>");
  doc.provenance.push_back("built-in profile " + name);
  return doc;
}

}  // namespace cbound
