#include "mpkit/dd_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mpkit {

namespace {

namespace bmp = boost::multiprecision;
using bmp::cpp_int;

cpp_int pow10(long n) { return bmp::pow(cpp_int(10), static_cast<unsigned>(n)); }

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

// Rounds num/den (> 0) to 107 significant bits, never finer than 2^-1074.
// Every such value splits exactly into hi + lo, and every normalized
// double-double with a full-size lo lies on this grid.
dd_real round_rational(const cpp_int& num, const cpp_int& den) {
  long t = static_cast<long>(bmp::msb(num)) - static_cast<long>(bmp::msb(den));
  if (t >= 0) {
    if (num < (den << t)) --t;
  } else if ((num << -t) < den) {
    --t;
  }
  const long b = std::max(t - 106, -1074L);

  cpp_int n = num;
  cpp_int d = den;
  if (b >= 0) {
    d <<= b;
  } else {
    n <<= -b;
  }
  cpp_int q;
  cpp_int r;
  bmp::divide_qr(n, d, q, r);
  const cpp_int r2 = r << 1;
  const int c = r2 > d ? 1 : (r2 == d ? 0 : -1);
  if (c > 0 || (c == 0 && bmp::bit_test(q, 0))) ++q;
  if (q == 0) return dd_real(0.0);

  const long bits = static_cast<long>(bmp::msb(q)) + 1;
  cpp_int h = q;
  long shift = 0;
  if (bits > 53) {
    shift = bits - 53;
    h = q >> shift;
    const cpp_int rem = q - (h << shift);
    const cpp_int half = cpp_int(1) << (shift - 1);
    if (rem > half || (rem == half && bmp::bit_test(h, 0))) ++h;
  }
  const cpp_int lo_int = q - (h << shift);
  const double hi = std::ldexp(h.convert_to<double>(), static_cast<int>(shift + b));
  if (!std::isfinite(hi)) return dd_real(std::numeric_limits<double>::infinity());
  const double lo = std::ldexp(lo_int.convert_to<double>(), static_cast<int>(b));
  return dd_real::from_sum(hi, lo);
}

// |hi + lo| == mag * 2^exp2 exactly.
struct Dyadic {
  cpp_int mag;
  long exp2 = 0;
};

Dyadic to_dyadic(double hi, double lo) {
  auto parts = [](double x, std::int64_t& m, long& e) {
    int ex = 0;
    const double f = std::frexp(x, &ex);
    m = static_cast<std::int64_t>(std::ldexp(f, 53));
    e = ex - 53;
  };
  std::int64_t mh = 0;
  std::int64_t ml = 0;
  long eh = 0;
  long el = 0;
  parts(hi, mh, eh);
  if (lo == 0.0) {
    Dyadic d{cpp_int(mh), eh};
    if (d.mag < 0) d.mag = -d.mag;
    return d;
  }
  parts(lo, ml, el);
  const long e = std::min(eh, el);
  cpp_int n = (cpp_int(mh) << (eh - e)) + (cpp_int(ml) << (el - e));
  if (n < 0) n = -n;
  return {n, e};
}

std::string with_exponent(bool negative, const std::string& digits, long e) {
  std::string out;
  out.reserve(digits.size() + 8);
  out += negative ? '-' : '+';
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out.append(digits, 1, std::string::npos);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%+03ld", e);
  out += buf;
  return out;
}

std::string non_finite(double hi) {
  if (std::isnan(hi)) return "NaN";
  return hi < 0 ? "-Inf" : "+Inf";
}

std::string exact_string(const dd_real& a, int digits) {
  const bool neg = std::signbit(a.hi());
  if (a.hi() == 0.0) return with_exponent(neg, std::string(static_cast<std::size_t>(digits), '0'), 0);

  const Dyadic v = to_dyadic(a.hi(), a.lo());
  const cpp_int lower = pow10(digits - 1);
  const cpp_int upper = pow10(digits);
  long k = static_cast<long>(std::floor(std::log10(std::fabs(a.hi()))));
  for (;;) {
    const long p = digits - 1 - k;
    cpp_int num = v.mag;
    cpp_int den = 1;
    if (v.exp2 >= 0) {
      num <<= v.exp2;
    } else {
      den <<= -v.exp2;
    }
    if (p >= 0) {
      num *= pow10(p);
    } else {
      den *= pow10(-p);
    }
    cpp_int q;
    cpp_int r;
    bmp::divide_qr(num, den, q, r);
    const cpp_int r2 = r << 1;
    const int c = r2 > den ? 1 : (r2 == den ? 0 : -1);
    if (c > 0 || (c == 0 && bmp::bit_test(q, 0))) ++q;
    if (q >= upper) {
      ++k;
    } else if (q < lower) {
      --k;
    } else {
      return with_exponent(neg, q.str(), k);
    }
  }
}

// Arithmetic as compiled into the QD library on an FMA host: sloppy
// addition, accurate division, products with fused cross terms.
namespace qd {

struct pair {
  double hi;
  double lo;
};

double quick_two_sum(double a, double b, double& e) {
  const double s = a + b;
  e = b - (s - a);
  return s;
}

double two_sum(double a, double b, double& e) {
  const double s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
  return s;
}

double two_prod(double a, double b, double& e) {
  const double p = a * b;
  e = std::fma(a, b, -p);
  return p;
}

pair add(pair a, pair b) {
  double e = 0.0;
  const double s = two_sum(a.hi, b.hi, e);
  e += a.lo + b.lo;
  pair r{};
  r.hi = quick_two_sum(s, e, r.lo);
  return r;
}

pair add(pair a, double b) {
  double e = 0.0;
  const double s = two_sum(a.hi, b, e);
  e += a.lo;
  pair r{};
  r.hi = quick_two_sum(s, e, r.lo);
  return r;
}

pair neg(pair a) { return {-a.hi, -a.lo}; }

pair mul(pair a, pair b) {
  double p2 = 0.0;
  const double p1 = two_prod(a.hi, b.hi, p2);
  p2 += std::fma(a.hi, b.lo, a.lo * b.hi);
  pair r{};
  r.hi = quick_two_sum(p1, p2, r.lo);
  return r;
}

pair mul(pair a, double b) {
  double p2 = 0.0;
  const double p1 = two_prod(a.hi, b, p2);
  p2 = std::fma(a.lo, b, p2);
  pair r{};
  r.hi = quick_two_sum(p1, p2, r.lo);
  return r;
}

pair sqr(pair a) {
  double p2 = 0.0;
  const double p1 = two_prod(a.hi, a.hi, p2);
  p2 += 2.0 * a.hi * a.lo;
  p2 += a.lo * a.lo;
  pair r{};
  r.hi = quick_two_sum(p1, p2, r.lo);
  return r;
}

pair div(pair a, pair b) {
  double q1 = a.hi / b.hi;
  pair r = add(a, neg(mul(b, q1)));
  double q2 = r.hi / b.hi;
  r = add(r, neg(mul(b, q2)));
  const double q3 = r.hi / b.hi;
  q1 = quick_two_sum(q1, q2, q2);
  return add(pair{q1, q2}, q3);
}

pair div(pair a, double b) {
  double p2 = 0.0;
  const double q1 = a.hi / b;
  const double p1 = two_prod(q1, b, p2);
  double e = 0.0;
  const double s = two_sum(a.hi, -p1, e);
  e -= p2;
  e += a.lo;
  const double q2 = (s + e) / b;
  pair r{};
  r.hi = quick_two_sum(q1, q2, r.lo);
  return r;
}

pair npwr(pair a, int n) {
  if (n == 0) return {1.0, 0.0};
  pair r = a;
  pair s{1.0, 0.0};
  int m = std::abs(n);
  if (m > 1) {
    while (m > 0) {
      if (m % 2 == 1) s = mul(s, r);
      m /= 2;
      if (m > 0) r = sqr(r);
    }
  } else {
    s = r;
  }
  if (n < 0) return div(pair{1.0, 0.0}, s);
  return s;
}

bool ge(pair a, double b) { return a.hi > b || (a.hi == b && a.lo >= 0.0); }
bool lt(pair a, double b) { return a.hi < b || (a.hi == b && a.lo < 0.0); }

std::string digits_of(const dd_real& a, int precision) {
  const bool negative = a.hi() < 0.0;
  if (a.hi() == 0.0) {
    return with_exponent(std::signbit(a.hi()), std::string(static_cast<std::size_t>(precision), '0'), 0);
  }
  const int count = precision + 1;
  pair r = negative ? pair{-a.hi(), -a.lo()} : pair{a.hi(), a.lo()};
  int e = static_cast<int>(std::floor(std::log10(r.hi)));
  const pair ten{10.0, 0.0};
  if (e < -300) {
    r = mul(r, npwr(ten, 300));
    r = div(r, npwr(ten, e + 300));
  } else if (e > 300) {
    r = {std::ldexp(r.hi, -53), std::ldexp(r.lo, -53)};
    r = div(r, npwr(ten, e));
    r = {std::ldexp(r.hi, 53), std::ldexp(r.lo, 53)};
  } else {
    r = div(r, npwr(ten, e));
  }
  if (ge(r, 10.0)) {
    r = div(r, 10.0);
    ++e;
  } else if (lt(r, 1.0)) {
    r = mul(r, 10.0);
    --e;
  }

  std::string s(static_cast<std::size_t>(count), '0');
  std::vector<int> d(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int digit = static_cast<int>(r.hi);
    r = add(r, -static_cast<double>(digit));
    r = mul(r, 10.0);
    d[static_cast<std::size_t>(i)] = digit;
  }
  for (int i = count - 1; i > 0; --i) {
    if (d[i] < 0) {
      --d[i - 1];
      d[i] += 10;
    } else if (d[i] > 9) {
      ++d[i - 1];
      d[i] -= 10;
    }
  }
  if (d[count - 1] >= 5) {
    ++d[count - 2];
    int i = count - 2;
    while (i > 0 && d[i] > 9) {
      d[i] -= 10;
      ++d[--i];
    }
  }
  if (d[0] > 9) {
    ++e;
    for (int i = precision - 1; i >= 2; --i) d[i] = d[i - 1];
    d[0] = 1;
    d[1] = 0;
  }
  s.resize(static_cast<std::size_t>(precision));
  for (int i = 0; i < precision; ++i) s[i] = static_cast<char>('0' + d[i]);
  return with_exponent(negative, s, e);
}

}  // namespace qd

}  // namespace

dd_real dd_from_string(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  const std::string_view body = s.substr(i);
  if (iequals(body, "inf") || iequals(body, "infinity")) {
    const double inf = std::numeric_limits<double>::infinity();
    return dd_real(negative ? -inf : inf);
  }
  if (iequals(body, "nan")) return dd_real(std::numeric_limits<double>::quiet_NaN());

  std::string mantissa;
  long frac_digits = 0;
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    mantissa += s[i++];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mantissa += s[i++];
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) throw ParseError("expected a digit", i);

  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_negative = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("expected exponent digits", i);
    }
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (exponent < 100000000) exponent = exponent * 10 + (s[i] - '0');
      ++i;
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != s.size()) throw ParseError("unexpected character", i);

  const double sign = negative ? -1.0 : 1.0;
  const auto first = mantissa.find_first_not_of('0');
  if (first == std::string::npos) return dd_real(sign * 0.0);
  mantissa.erase(0, first);
  const long scale = exponent - frac_digits;
  const long magnitude = static_cast<long>(mantissa.size()) - 1 + scale;
  if (magnitude > 310) return dd_real(sign * std::numeric_limits<double>::infinity());
  if (magnitude < -340) return dd_real(sign * 0.0);

  cpp_int num(mantissa);
  cpp_int den = 1;
  if (scale >= 0) {
    num *= pow10(scale);
  } else {
    den = pow10(-scale);
  }
  const dd_real r = round_rational(num, den);
  return negative ? -r : r;
}

dd_real dd_from_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("dd_from_ratio: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return dd_real(0.0);
  const dd_real r = round_rational(bmp::abs(cpp_int(num)), cpp_int(den));
  return num < 0 ? -r : r;
}

dd_real::dd_real(std::string_view decimal) : dd_real(dd_from_string(decimal)) {}

std::string dd_to_string(const dd_real& a, int digits, DigitMode mode) {
  if (!std::isfinite(a.hi())) return non_finite(a.hi());
  if (mode == DigitMode::qd_compatible) {
    digits = std::clamp(digits, 1, 40);
    return qd::digits_of(a, digits);
  }
  digits = std::clamp(digits, 1, 1000);
  return exact_string(a, digits);
}

std::string double_to_string(double a, int digits) {
  return dd_to_string(dd_real(a), digits, DigitMode::exact);
}

std::string dd_to_string(const dd_complex& z, int digits) {
  std::string im = dd_to_string(z.imag(), digits);
  if (im == "NaN") im = "+NaN";
  return dd_to_string(z.real(), digits) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const dd_real& a) { return os << dd_to_string(a, 33); }

std::ostream& operator<<(std::ostream& os, const dd_complex& z) { return os << dd_to_string(z, 33); }

}  // namespace mpkit
