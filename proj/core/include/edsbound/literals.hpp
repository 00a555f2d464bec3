#pragma once

namespace edsbound::literals {

// Every fixed numeric constant of the bound tower, named once.

// additive term of the height-difference constant C_E
inline constexpr double height_diff_base = 2.84;
// denominator scale of the Lang-constant J_E
inline constexpr double lang_scale = 1e15;
// logarithm argument factor in J_E
inline constexpr double lang_log_factor = 104613.0;
// elliptic-logarithm lower-bound constant (k = 2 case)
inline constexpr double david_c1 = 3.6e41;
// 256 * david_c1 as printed in the closed form (slightly below 9.216e43)
inline constexpr double c3_scale = 9.21e43;
// closed-form replacement for 3*pi / Im(tau) at Im(tau) >= sqrt(3)/2
inline constexpr double v_bound_factor = 11.0;
// closed-form bound on |z / tau1| - 1/2 via 5.7 + log+ |j|
inline constexpr double z_over_tau_base = 6.2;
inline constexpr double abs_tau_base = 5.7;
inline constexpr unsigned lattice_multiplier = 256;

}  // namespace edsbound::literals
