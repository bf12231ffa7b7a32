#include "core/budget.hpp"

#include <cmath>
#include <sstream>

#include "core/constraint.hpp"

namespace cbound {

namespace {

// Built-in underground rotation surrogate, ASD_phi(f) = A (1 mHz / f).
// The level puts the default dual-balance residual force floor at
// 1e-17 N/sqrt(Hz) at 1 mHz.
constexpr double kSurrogateRotationAsd1mHz = 2.5330295910584439e-11;  // rad/sqrt(Hz)

void require_field(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

void require_frequency(double f) {
  if (!std::isfinite(f) || f <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "frequency must be positive");
}

}  // namespace

TestMass DeviceConfig::default_test_mass() {
  const double mass = 1.0, density = 2330.0;
  return TestMass{mass, density, std::cbrt(mass / density),
                  constants::lattice_fused_silica};
}

double DeviceConfig::default_omega_m() { return 2.0 * M_PI * 1e-3; }

void DeviceConfig::validate() const {
  tm.validate();
  require_field(std::isfinite(arm_length) && arm_length > 0, "arm_length must be positive");
  require_field(std::isfinite(omega_m) && omega_m > 0, "omega_m must be positive");
  require_field(std::isfinite(quality) && quality > 0, "quality must be positive");
  require_field(std::isfinite(temperature) && temperature > 0, "temperature must be positive");
  require_field(std::isfinite(temperature_asd) && temperature_asd >= 0,
                "temperature_asd must be nonnegative");
  require_field(std::isfinite(air_pressure) && air_pressure >= 0,
                "air_pressure must be nonnegative");
  require_field(std::isfinite(laser_power) && laser_power >= 0,
                "laser_power must be nonnegative");
  require_field(std::isfinite(laser_wavelength) && laser_wavelength > 0,
                "laser_wavelength must be positive");
  require_field(std::isfinite(rin_1mhz) && rin_1mhz >= 0, "rin_1mhz must be nonnegative");
  require_field(std::isfinite(freq_noise_1mhz) && freq_noise_1mhz >= 0,
                "freq_noise_1mhz must be nonnegative");
  require_field(std::isfinite(alpha_e) && alpha_e >= 0, "alpha_e must be nonnegative");
  require_field(std::isfinite(cmrr_seismic) && cmrr_seismic > 0 && cmrr_seismic <= 1,
                "cmrr_seismic must be in (0, 1]");
  require_field(std::isfinite(cm_residual_thermo) && cm_residual_thermo >= 0 &&
                    cm_residual_thermo <= 1,
                "cm_residual_thermo must be in [0, 1]");
  require_field(std::isfinite(rin_suppression) && rin_suppression >= 0 &&
                    rin_suppression <= 1,
                "rin_suppression must be in [0, 1]");
  require_field(std::isfinite(arm_mismatch) && arm_mismatch >= 0,
                "arm_mismatch must be nonnegative");
  require_field(std::isfinite(gas_molecule_mass) && gas_molecule_mass > 0,
                "gas_molecule_mass must be positive");
  require_field(std::isfinite(shot_noise_asd) && shot_noise_asd >= 0,
                "shot_noise_asd must be nonnegative");
  if (seismic_rotation && seismic_rotation->kind() != SpectrumKind::AnglePsd)
    throw Error(ErrorCode::InvalidArgument,
                "seismic_rotation spectrum must have kind angle_psd");
  if (newtonian && newtonian->kind() != SpectrumKind::ForcePsd)
    throw Error(ErrorCode::InvalidArgument,
                "newtonian spectrum must have kind force_psd");
}

std::complex<double> susceptibility(const DeviceConfig& cfg, double f) {
  return oscillator_susceptibility(
      OscillatorParams{cfg.effective_mass(), cfg.omega_m, cfg.quality}, f);
}

double thermal_force_psd(const DeviceConfig& cfg, double f) {
  cfg.validate();
  require_frequency(f);
  return 4.0 * constants::k_B * cfg.temperature * cfg.effective_mass() *
         cfg.omega_m * cfg.omega_m / (cfg.quality * 2.0 * M_PI * f);
}

double gas_damping_psd(const DeviceConfig& cfg, double f) {
  cfg.validate();
  require_frequency(f);
  const double b2 = cfg.tm.side * cfg.tm.side;
  return cfg.air_pressure * b2 *
         std::sqrt(128.0 * cfg.gas_molecule_mass * constants::k_B *
                   cfg.temperature / M_PI);
}

LaserNoise laser_noise_psd(const DeviceConfig& cfg, double f) {
  cfg.validate();
  require_frequency(f);
  const double one_over_f = 1e-3 / f;  // both Table levels are quoted at 1 mHz
  const double rp_asd =
      2.0 * cfg.laser_power / constants::c_light * cfg.rin_1mhz * one_over_f;
  const double nu = constants::c_light / cfg.laser_wavelength;
  const double sensing_asd =
      cfg.freq_noise_1mhz * one_over_f / nu * cfg.arm_mismatch;
  return LaserNoise{rp_asd * rp_asd, sensing_asd * sensing_asd};
}

double thermoelastic_psd(const DeviceConfig& cfg, double f) {
  cfg.validate();
  require_frequency(f);
  const double asd = cfg.alpha_e * cfg.tm.side * cfg.temperature_asd *
                     cfg.cm_residual_thermo;
  return asd * asd;
}

double seismic_rotation_psd(const DeviceConfig& cfg, double f) {
  cfg.validate();
  require_frequency(f);
  double s_phi;
  if (cfg.seismic_rotation) {
    try {
      s_phi = cfg.seismic_rotation->value_at(f);
    } catch (const Error& e) {
      throw Error(e.code(), std::string("seismic rotation source: ") + e.what());
    }
  } else {
    const double asd = kSurrogateRotationAsd1mHz * (1e-3 / f);
    s_phi = asd * asd;
  }
  const double spring = cfg.moment_of_inertia() * cfg.omega_m * cfg.omega_m;
  const double torque_psd = spring * spring * s_phi;
  const double lever = cfg.lever_arm();
  return torque_psd / (lever * lever) * cfg.cmrr_seismic * cfg.cmrr_seismic;
}

double sql_force_psd(double mass, double f, const PhysicalConstants& pc) {
  pc.validate();
  require_frequency(f);
  if (!std::isfinite(mass) || mass <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "mass must be positive");
  const double w = 2.0 * M_PI * f;
  return pc.hbar * mass * w * w;
}

const BudgetComponent* BudgetReport::find(std::string_view name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

BudgetReport build_budget(const DeviceConfig& cfg, double f_min, double f_max,
                          std::size_t n_points, const PhysicalConstants& pc) {
  cfg.validate();
  pc.validate();
  if (!(f_min > 0) || !(f_max > f_min))
    throw Error(ErrorCode::InvalidArgument, "budget band needs 0 < f_min < f_max");
  if (n_points < 2)
    throw Error(ErrorCode::InvalidArgument, "budget needs at least two grid points");

  BudgetReport rep;
  rep.freqs = log_grid(f_min, f_max, n_points);
  const std::size_t n = rep.freqs.size();

  std::vector<double> chi2(n);
  for (std::size_t i = 0; i < n; ++i)
    chi2[i] = std::norm(susceptibility(cfg, rep.freqs[i]));

  auto force_component = [&](std::string name, bool calibratable, auto&& model) {
    BudgetComponent c{std::move(name), calibratable, std::vector<double>(n),
                      std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      c.force_psd[i] = model(rep.freqs[i]);
      c.disp_psd[i] = c.force_psd[i] * chi2[i];
    }
    rep.components.push_back(std::move(c));
  };
  auto disp_component = [&](std::string name, auto&& model) {
    BudgetComponent c{std::move(name), false, std::vector<double>(n),
                      std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      c.disp_psd[i] = model(rep.freqs[i]);
      c.force_psd[i] = c.disp_psd[i] / chi2[i];
    }
    rep.components.push_back(std::move(c));
  };

  force_component("suspension_thermal", true,
                  [&](double f) { return thermal_force_psd(cfg, f); });
  force_component("gas_damping", true,
                  [&](double f) { return gas_damping_psd(cfg, f); });
  const double rin_sup2 = cfg.rin_suppression * cfg.rin_suppression;
  force_component("laser_radiation_pressure", false, [&](double f) {
    return laser_noise_psd(cfg, f).radiation_pressure_force_psd * rin_sup2;
  });
  disp_component("laser_frequency_sensing", [&](double f) {
    return laser_noise_psd(cfg, f).frequency_sensing_disp_psd;
  });
  disp_component("thermoelastic", [&](double f) { return thermoelastic_psd(cfg, f); });
  force_component("seismic_rotation", false,
                  [&](double f) { return seismic_rotation_psd(cfg, f); });
  if (cfg.newtonian) {
    force_component("newtonian", false, [&](double f) {
      try {
        return cfg.newtonian->value_at(f);
      } catch (const Error& e) {
        throw Error(e.code(), std::string("newtonian source: ") + e.what());
      }
    });
  }
  if (cfg.shot_noise_asd > 0.0) {
    disp_component("shot_noise", [&](double) {
      return cfg.shot_noise_asd * cfg.shot_noise_asd;
    });
  }
  force_component("sql", false, [&](double f) {
    return sql_force_psd(cfg.effective_mass(), f, pc);
  });

  rep.total_force.assign(n, 0.0);
  rep.total_disp.assign(n, 0.0);
  rep.residual_force.assign(n, 0.0);
  rep.residual_disp.assign(n, 0.0);
  for (const auto& c : rep.components) {
    for (std::size_t i = 0; i < n; ++i) {
      rep.total_force[i] += c.force_psd[i];
      rep.total_disp[i] += c.disp_psd[i];
      if (!c.calibratable) {
        rep.residual_force[i] += c.force_psd[i];
        rep.residual_disp[i] += c.disp_psd[i];
      }
    }
  }

  {
    std::ostringstream os;
    os << "gas damping: isolated-cube free-molecular-flow level p b^2 "
          "sqrt(128 m_gas k_B T / pi), m_gas = " << cfg.gas_molecule_mass << " kg";
    rep.notes.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "laser frequency sensing scales linearly with the interferometer "
          "arm mismatch, here " << cfg.arm_mismatch << " m";
    rep.notes.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "laser radiation pressure enters the combined budget suppressed by "
       << cfg.rin_suppression << " (active stabilization)";
    rep.notes.push_back(os.str());
  }
  if (cfg.seismic_rotation) {
    std::ostringstream os;
    os << "seismic rotation: user spectrum covering [" << cfg.seismic_rotation->f_min()
       << ", " << cfg.seismic_rotation->f_max() << "] Hz";
    rep.notes.push_back(os.str());
  } else {
    std::ostringstream os;
    os << "seismic rotation: built-in surrogate ASD_phi = "
       << kSurrogateRotationAsd1mHz << " (1 mHz / f) rad/sqrt(Hz)";
    rep.notes.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "sql reference evaluated at the effective mass " << cfg.effective_mass()
       << " kg";
    rep.notes.push_back(os.str());
  }
  if (cfg.shot_noise_asd == 0.0)
    rep.notes.push_back("sensing shot noise disabled (no cavity parameters)");
  rep.notes.push_back(
      "calibrated residual removes suspension_thermal and gas_damping");

  return rep;
}

}  // namespace cbound
