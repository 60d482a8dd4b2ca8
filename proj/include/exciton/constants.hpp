// Physical constants and unit conversions.
//
// Everything inside the library is SI. Conversions from the lab units used
// in configuration files (eV, angstrom, e*angstrom) happen at the boundary.

#pragma once

#include <numbers>

namespace exciton {

namespace constants {

// CODATA 2018. c, h and e are exact by definition of the SI.
inline constexpr double speed_of_light = 299792458.0;             // m/s
inline constexpr double planck = 6.62607015e-34;                  // J s
inline constexpr double hbar = 1.054571817e-34;                   // J s
inline constexpr double elementary_charge = 1.602176634e-19;      // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;   // F/m

}  // namespace constants

namespace units {

inline constexpr double electron_volt = constants::elementary_charge;  // J
inline constexpr double angstrom = 1e-10;                              // m
inline constexpr double e_angstrom = constants::elementary_charge * angstrom;  // C m
inline constexpr double degree = std::numbers::pi / 180.0;            // rad

}  // namespace units

/// Dipole angle at which the axial dipole-dipole coupling vanishes,
/// arccos(1/sqrt(3)) ~ 54.7356 deg.
double magic_angle();

/// 1 / (4 pi eps0), the Coulomb constant [N m^2 / C^2].
inline constexpr double coulomb_factor()
{
    return 1.0 / (4.0 * std::numbers::pi * constants::vacuum_permittivity);
}

}  // namespace exciton
