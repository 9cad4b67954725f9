#pragma once

#include <numbers>

namespace ladderlab {

/// Numeric constants shared by every module. `euler_c` is the constant c in
/// the factor (1 - c) of the ladder increments.
struct Constants {
  double euler_c;
  double one_minus_c;
  double ln_two_pi;
  double precision_target;
};

inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kOneMinusC = 1.0 - kEulerGamma;
inline constexpr double kLnTwoPi = 1.837877066409345483560659472811;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultPrecisionTarget = 1e-10;

inline constexpr Constants kConstants{kEulerGamma, kOneMinusC, kLnTwoPi,
                                      kDefaultPrecisionTarget};

}  // namespace ladderlab
