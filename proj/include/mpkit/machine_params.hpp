#pragma once

// Machine parameters in the style of LAPACK's xLAMCH.

#include <string>
#include <vector>

#include "mpkit/dd_real.hpp"

namespace mpkit {

enum class Precision { binary64, double_double };

const char* precision_name(Precision p) noexcept;  // "f64" / "dd"

struct MachineParams {
  dd_real eps;              // E: relative machine epsilon (unit roundoff)
  dd_real safe_min;         // S: 1/safe_min does not overflow
  dd_real base;             // B
  dd_real precision;        // P: eps * base
  dd_real mantissa_digits;  // N
  dd_real rounding;         // R: 1 when rounding to nearest
  dd_real min_exponent;     // M
  dd_real underflow;        // U
  dd_real max_exponent;     // L
  dd_real overflow;         // O
  dd_real recip_safe_min;   // -: 1/safe_min
};

MachineParams machine_params(Precision p);

/// Value for one of the characters E S B P N R M U L O - (case-insensitive).
/// Returns 0 for any other character.
dd_real rlamch(Precision p, char cmach);

template <class T>
T Rlamch(char cmach);

template <>
inline double Rlamch<double>(char cmach) {
  return rlamch(Precision::binary64, cmach).hi();
}

template <>
inline dd_real Rlamch<dd_real>(char cmach) {
  return rlamch(Precision::double_double, cmach);
}

struct RlamchRow {
  char key;
  std::string label;
  std::string value;
};

/// The constant table as printed by the reference tools: "%+.16e" for
/// binary64, 33 significant digits for double-double.
std::vector<RlamchRow> rlamch_table(Precision p);

}  // namespace mpkit
