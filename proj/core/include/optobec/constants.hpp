#pragma once

#include <numbers>

namespace optobec::constants {

// SI values (CODATA 2018; hbar and k_B are exact since the 2019 redefinition).
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K
inline constexpr double c_light = 299792458.0;       // m/s
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

} // namespace optobec::constants
