#include "mpkit/machine_params.hpp"

#include <cctype>
#include <cfloat>
#include <cmath>
#include <cstdio>

#include "mpkit/dd_io.hpp"

namespace mpkit {

namespace {

MachineParams make_binary64() {
  MachineParams p;
  p.eps = DBL_EPSILON * 0.5;
  p.safe_min = DBL_MIN;
  p.base = 2.0;
  p.precision = DBL_EPSILON;
  p.mantissa_digits = 53.0;
  p.rounding = 1.0;
  p.min_exponent = -1021.0;
  p.underflow = DBL_MIN;
  p.max_exponent = 1024.0;
  p.overflow = DBL_MAX;
  p.recip_safe_min = 1.0 / DBL_MIN;
  return p;
}

// safe_min and overflow are pulled in from the binary64 limits so that
// squares, square roots and reciprocals of extreme values stay finite.
MachineParams make_double_double() {
  MachineParams p;
  p.eps = 4.93038065763132e-32;
  p.safe_min = std::ldexp(1.0, -969);
  p.base = 2.0;
  p.precision = p.eps * 2.0;
  p.mantissa_digits = 106.0;
  p.rounding = 1.0;
  p.min_exponent = -968.0;
  p.underflow = p.safe_min;
  p.max_exponent = 1024.0;
  p.overflow = dd_real::raw(1.79769313486231570815e+308, 9.97920154767359795037e+291);
  p.recip_safe_min = std::ldexp(1.0, 969);
  return p;
}

}  // namespace

const char* precision_name(Precision p) noexcept {
  return p == Precision::binary64 ? "f64" : "dd";
}

MachineParams machine_params(Precision p) {
  static const MachineParams f64 = make_binary64();
  static const MachineParams dd = make_double_double();
  return p == Precision::binary64 ? f64 : dd;
}

dd_real rlamch(Precision p, char cmach) {
  const MachineParams m = machine_params(p);
  switch (std::toupper(static_cast<unsigned char>(cmach))) {
    case 'E': return m.eps;
    case 'S': return m.safe_min;
    case 'B': return m.base;
    case 'P': return m.precision;
    case 'N': return m.mantissa_digits;
    case 'R': return m.rounding;
    case 'M': return m.min_exponent;
    case 'U': return m.underflow;
    case 'L': return m.max_exponent;
    case 'O': return m.overflow;
    case '-': return m.recip_safe_min;
    default: return dd_real(0.0);
  }
}

std::vector<RlamchRow> rlamch_table(Precision p) {
  static const std::pair<char, const char*> rows[] = {
      {'E', "Epsilon"},
      {'S', "Safe minimum"},
      {'B', "Base"},
      {'P', "Precision"},
      {'N', "Number of digits in mantissa"},
      {'R', "Rounding mode"},
      {'M', "Minimum exponent:"},
      {'U', "Underflow threshold"},
      {'L', "Largest exponent"},
      {'O', "Overflow threshold"},
      {'-', "Reciprocal of safe minimum"},
  };
  std::vector<RlamchRow> out;
  for (const auto& [key, label] : rows) {
    const dd_real v = rlamch(p, key);
    std::string text;
    if (p == Precision::binary64) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%+.16e", v.hi());
      text = buf;
    } else {
      text = dd_to_string(v, 33, DigitMode::qd_compatible);
    }
    out.push_back({key, label, text});
  }
  return out;
}

}  // namespace mpkit
