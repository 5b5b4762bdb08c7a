// constants.hpp — CODATA physical constants and the few unit conversions in use

#pragma once

#include <numbers>

namespace tphonon::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double boltzmann = 1.380649e-23;         // J / K
inline constexpr double electron_mass = 9.1093837015e-31; // kg
inline constexpr double elementary_charge = 1.602176634e-19; // C

// ω = 2π f
inline constexpr double angular_from_hz(double f) { return 2.0 * pi * f; }
inline constexpr double hz_from_angular(double omega) { return omega / (2.0 * pi); }

// ħω / k_B T; infinite at T = 0.
double reduced_energy(double omega, double temperature);

} // namespace tphonon::constants
