#pragma once

// Decimal conversion for dd_real.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpkit/dd_complex.hpp"
#include "mpkit/dd_real.hpp"

namespace mpkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  /// 0-based offset of the offending character.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses [+-]digits[.digits][(e|E)[+-]digits], or inf/infinity/nan
/// (case-insensitive), correctly rounded to the nearest value on the
/// 106-bit double-double significand grid (ties to even).
dd_real dd_from_string(std::string_view s);

/// num/den correctly rounded the same way. den must be nonzero.
dd_real dd_from_ratio(std::int64_t num, std::int64_t den);

enum class DigitMode {
  /// Correctly rounded (ties to even) decimal expansion of hi + lo.
  exact,
  /// Digit generation of the QD library's dd_real::write (scaled by a
  /// double-double power of ten, then peeled digit by digit). Reproduces the
  /// digits printed by software built on QD, including its last-digit noise.
  qd_compatible,
};

/// Signed scientific notation with `digits` significant digits:
/// "+d.ddd...e+XX". Non-finite values print as "+Inf", "-Inf", "NaN".
/// 1 <= digits <= 1000 for exact mode, <= 40 for qd_compatible.
std::string dd_to_string(const dd_real& a, int digits = 34, DigitMode mode = DigitMode::exact);

/// binary64 counterpart of dd_to_string (exact mode).
std::string double_to_string(double a, int digits = 17);

std::string dd_to_string(const dd_complex& z, int digits = 34);

std::ostream& operator<<(std::ostream& os, const dd_real& a);
std::ostream& operator<<(std::ostream& os, const dd_complex& z);

}  // namespace mpkit
