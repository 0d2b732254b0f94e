#pragma once

namespace entlab::constants {

// CODATA 2018 / SI-exact defined values.
inline constexpr double kPlanckJs = 6.62607015e-34;      // h, J s
inline constexpr double kBoltzmannJperK = 1.380649e-23;  // k, J/K

}  // namespace entlab::constants
