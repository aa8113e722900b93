#pragma once

// Physical constants, CODATA 2018 recommended values.
//
// Since the 2019 SI redefinition h, e and c are exact. Derived quantities are
// listed with the digits CODATA publishes, and `relative_precision` states how
// far a value computed from the exact constants may sit from the listed digits.

#include <numbers>

namespace lrinv::constants {

struct Constant {
  double value;
  double relative_precision;  // 0 for exact definitions
  const char* unit;
};

namespace si {
// CODATA 2018, exact by definition of the SI.
inline constexpr Constant planck{6.62607015e-34, 0.0, "J s"};
inline constexpr Constant elementary_charge{1.602176634e-19, 0.0, "C"};
inline constexpr Constant speed_of_light{299792458.0, 0.0, "m s^-1"};
// CODATA 2018, relative standard uncertainty 3.0e-10.
inline constexpr Constant electron_mass{9.1093837015e-31, 3.0e-10, "kg"};
// CODATA 2018 von Klitzing constant h/e², exact; CODATA prints 10 significant
// digits, so one unit in the last digit (3.9e-10 relative) bounds the gap.
inline constexpr Constant von_klitzing{25812.80745, 4.0e-10, "ohm"};
}  // namespace si

namespace cgs {
// Gaussian units, converted from the SI values above.
inline constexpr Constant planck{6.62607015e-27, 0.0, "erg s"};
inline constexpr Constant elementary_charge{4.803204712570263e-10, 1.0e-15, "statC"};
inline constexpr Constant speed_of_light{2.99792458e10, 0.0, "cm s^-1"};
inline constexpr Constant electron_mass{9.1093837015e-28, 3.0e-10, "g"};
}  // namespace cgs

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace lrinv::constants
