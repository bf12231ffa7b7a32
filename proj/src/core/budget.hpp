#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/constants.hpp"
#include "core/spectrum.hpp"
#include "core/test_mass.hpp"

namespace cbound {

// Dual torsion balance: two nominally identical cubes of mass tm.mass on
// arms of total length arm_length, read out differentially. Defaults
// describe the reference instrument (1 kg cubes, 1 mHz mode, Q = 1e6).
struct DeviceConfig {
  TestMass tm = default_test_mass();
  double arm_length = 0.1;        // m, tip-to-tip arm (lever arm is half)
  double omega_m = default_omega_m();  // rad/s torsion resonance
  double quality = 1e6;
  double temperature = 300.0;     // K
  double temperature_asd = 1e-4;  // K/sqrt(Hz), white
  double air_pressure = 1e-7;     // Pa
  double laser_power = 1e-3;      // W
  double laser_wavelength = 1064e-9;  // m
  double rin_1mhz = 1e-5;         // 1/sqrt(Hz) at 1 mHz, 1/f law
  double freq_noise_1mhz = 1e4;   // Hz/sqrt(Hz) at 1 mHz, 1/f law
  double alpha_e = 5.5e-7;        // 1/K thermal expansion

  // Differential-readout residual fractions (1 = no rejection).
  double cmrr_seismic = 0.1;
  double cm_residual_thermo = 0.1;
  // Intensity noise is actively stabilized and partially common; this factor
  // enters only the combined budget, not the raw radiation-pressure model.
  double rin_suppression = 0.1;

  double arm_mismatch = 1e-3;     // m, interferometer arm-length imbalance
  double gas_molecule_mass = constants::m_n2;  // kg
  double shot_noise_asd = 0.0;    // m/sqrt(Hz); no cavity specified, off

  // Ground rotation angle PSD (kind AnglePsd). Absent selects the built-in
  // 1/f surrogate representative of a quiet underground site.
  std::optional<NoiseSpectrum> seismic_rotation;
  // Extra force PSD slot (kind ForcePsd), e.g. Newtonian gravity gradients.
  std::optional<NoiseSpectrum> newtonian;

  double lever_arm() const { return arm_length / 2.0; }
  double effective_mass() const { return 2.0 * tm.mass; }
  double moment_of_inertia() const {
    return effective_mass() * lever_arm() * lever_arm();
  }

  void validate() const;

  static TestMass default_test_mass();
  static double default_omega_m();
};

// Mechanical response of the differential torsion mode referred to the
// lever arm, x = chi F (structural damping).
std::complex<double> susceptibility(const DeviceConfig& cfg, double f);

// Suspension thermal force noise, fluctuation-dissipation with structural
// damping: S_F = 4 k_B T M_eff omega_m^2 / (Q 2 pi f).
double thermal_force_psd(const DeviceConfig& cfg, double f);

// Residual-gas damping on a cube face pair in free molecular flow:
// S_F = p b^2 sqrt(128 m_gas k_B T / pi), white.
double gas_damping_psd(const DeviceConfig& cfg, double f);

struct LaserNoise {
  double radiation_pressure_force_psd;  // N^2/Hz, unsuppressed
  double frequency_sensing_disp_psd;    // m^2/Hz
};

// Radiation-pressure force ASD (2P/c) RIN(f) and frequency-noise sensing
// displacement ASD (df(f)/nu) arm_mismatch; both inherit the 1/f laws.
LaserNoise laser_noise_psd(const DeviceConfig& cfg, double f);

// Apparent displacement from thermal expansion of the cube under the
// measured temperature ASD, after common-mode rejection.
double thermoelastic_psd(const DeviceConfig& cfg, double f);

// Ground rotation coupling through the fiber spring: torque PSD
// (I omega_m^2)^2 S_phi, referred to force via the lever arm, times
// cmrr_seismic^2 for the dual-balance combination.
double seismic_rotation_psd(const DeviceConfig& cfg, double f);

// Standard quantum limit reference for force sensing on a mass m.
double sql_force_psd(double mass, double f, const PhysicalConstants& pc = {});

struct BudgetComponent {
  std::string name;
  bool calibratable = false;  // subtracted in the calibrated residual
  std::vector<double> force_psd;
  std::vector<double> disp_psd;
};

// Per-source budget over a log-spaced band, with force- and displacement-
// referred views (exactly related by |chi|^2), the uncorrelated-sum total,
// and the calibrated residual (total minus thermal and gas, which a
// dedicated campaign can measure and subtract).
struct BudgetReport {
  std::vector<double> freqs;
  std::vector<BudgetComponent> components;
  std::vector<double> total_force;
  std::vector<double> total_disp;
  std::vector<double> residual_force;
  std::vector<double> residual_disp;
  std::vector<std::string> notes;

  const BudgetComponent* find(std::string_view name) const;
};

BudgetReport build_budget(const DeviceConfig& cfg, double f_min, double f_max,
                          std::size_t n_points, const PhysicalConstants& pc = {});

}  // namespace cbound
