#pragma once

namespace compton::constants {

// Electron mass sets the internal unit system: every energy/momentum in the
// library is measured in units of m (so m = 1 below). Conversions to
// laboratory units happen only at the I/O boundary.
inline constexpr double electron_mass = 1.0;

// Electron rest energy in keV, for the --units kev input mode.
inline constexpr double electron_mass_kev = 510.998950;

// Fine-structure constant.
inline constexpr double alpha_fs = 1.0 / 137.035999;

// (hbar c / m_e c^2)^2 expressed in barn: the natural-unit cross-section
// scale. (197.3269804 fm MeV / 0.510998950 MeV)^2 / 100 fm^2-per-barn.
inline constexpr double hbarc_fm_mev = 197.3269804;
inline constexpr double natural_xs_barn =
    (hbarc_fm_mev / electron_mass_kev * 1000.0) *
    (hbarc_fm_mev / electron_mass_kev * 1000.0) / 100.0;

inline constexpr double barn_per_microbarn = 1e-6;

// 1 barn = 1e-28 m^2 = 1e-10 nm^2; used by the event-rate estimate.
inline constexpr double nm2_per_barn = 1e-10;

inline constexpr const char* version = "1.0.0";

} // namespace compton::constants
