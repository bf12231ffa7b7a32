#pragma once

#include <string>

#include "core/errors.hpp"

namespace cbound {

// CODATA 2018 exact/recommended values, SI.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double G = 6.67430e-11;              // m^3 kg^-1 s^-2
inline constexpr double k_B = 1.380649e-23;           // J/K
inline constexpr double c_light = 299792458.0;        // m/s
inline constexpr double amu = 1.66053906660e-27;      // kg
inline constexpr double m_proton = 1.67262192369e-27; // kg

// Mass of an N2 molecule, the default residual-gas species.
inline constexpr double m_n2 = 4.65e-26;  // kg

// Cubic lattice constants used by the built-in test-mass profiles.
inline constexpr double lattice_au_pt = 4.0e-10;        // m
inline constexpr double lattice_fused_silica = 5.0e-10; // m
}  // namespace constants

// Constants bundle threaded through the model evaluations. m0 is the
// reference mass of the localization models (amu by default; some
// conventions use the proton mass instead, which shifts rates by ~1.5%).
struct PhysicalConstants {
  double hbar = constants::hbar;
  double G = constants::G;
  double k_B = constants::k_B;
  double m0 = constants::amu;
  double c = constants::c_light;

  void validate() const {
    if (!(hbar > 0) || !(G > 0) || !(k_B > 0) || !(m0 > 0) || !(c > 0))
      throw Error(ErrorCode::InvalidArgument,
                  "physical constants must all be positive");
  }
};

}  // namespace cbound
