#pragma once

// Double-double real: an unevaluated sum hi + lo of two binary64 values with
// |lo| <= ulp(hi)/2, giving about 106 significand bits (~32 decimal digits).
//
// Non-finite values are canonical: hi is +-inf or NaN and lo is 0. Nothing
// traps; NaN and inf flow through every operation in hi.

#include <cassert>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string_view>

#include "mpkit/eft.hpp"

namespace mpkit {

class dd_real {
 public:
  constexpr dd_real() noexcept = default;
  constexpr dd_real(double hi) noexcept : hi_(hi) {}  // NOLINT: implicit by design of the numeric concept

  /// Exact for every 64-bit integer.
  template <std::integral I>
  constexpr dd_real(I v) noexcept {  // NOLINT
    if constexpr (sizeof(I) <= 4) {
      hi_ = static_cast<double>(v);
    } else {
      hi_ = static_cast<double>(v);
      // v - hi fits in 53 bits, so the subtraction is exact in int64 unless hi
      // rounded up past INT64_MAX; that case is handled through long double.
      if (hi_ >= 0x1p63) {
        lo_ = static_cast<double>(static_cast<long double>(v) - static_cast<long double>(hi_));
      } else {
        lo_ = static_cast<double>(static_cast<std::int64_t>(v) - static_cast<std::int64_t>(hi_));
      }
      auto s = eft::quick_two_sum(hi_, lo_);
      hi_ = s.r;
      lo_ = s.e;
    }
  }

  /// Parses a decimal string (see dd_io.hpp). Throws ParseError.
  explicit dd_real(std::string_view decimal);

  /// Builds a value from two arbitrary doubles, renormalizing the pair.
  static dd_real from_sum(double a, double b) noexcept {
    const auto s = eft::two_sum(a, b);
    return raw(s.r, s.e);
  }

  /// Trusted constructor: the caller guarantees hi == fl(hi + lo).
  static constexpr dd_real raw(double hi, double lo) noexcept {
    dd_real r;
    r.hi_ = hi;
    r.lo_ = std::isfinite(hi) ? lo : 0.0;
    return r;
  }

  [[nodiscard]] constexpr double hi() const noexcept { return hi_; }
  [[nodiscard]] constexpr double lo() const noexcept { return lo_; }

  /// Nearest binary64 (hi, by normalization).
  explicit constexpr operator double() const noexcept { return hi_; }

  [[nodiscard]] bool is_normalized() const noexcept {
    if (!std::isfinite(hi_)) return lo_ == 0.0;
    return std::isfinite(lo_) && hi_ + lo_ == hi_ && (hi_ != 0.0 || lo_ == 0.0);
  }

  // -- arithmetic -----------------------------------------------------------

  friend dd_real operator-(const dd_real& a) noexcept { return raw(-a.hi_, -a.lo_); }

  /// Accurate addition: two two-sums followed by two renormalizations.
  friend dd_real operator+(const dd_real& a, const dd_real& b) noexcept {
    auto s = eft::two_sum(a.hi_, b.hi_);
    if (!std::isfinite(s.r)) return raw(s.r, 0.0);
    const auto t = eft::two_sum(a.lo_, b.lo_);
    s.e += t.r;
    s = eft::quick_two_sum(s.r, s.e);
    s.e += t.e;
    s = eft::quick_two_sum(s.r, s.e);
    return raw(s.r, s.e);
  }

  friend dd_real operator+(const dd_real& a, double b) noexcept {
    auto s = eft::two_sum(a.hi_, b);
    if (!std::isfinite(s.r)) return raw(s.r, 0.0);
    s.e += a.lo_;
    s = eft::quick_two_sum(s.r, s.e);
    return raw(s.r, s.e);
  }
  friend dd_real operator+(double a, const dd_real& b) noexcept { return b + a; }

  friend dd_real operator-(const dd_real& a, const dd_real& b) noexcept { return a + (-b); }
  friend dd_real operator-(const dd_real& a, double b) noexcept { return a + (-b); }
  friend dd_real operator-(double a, const dd_real& b) noexcept { return (-b) + a; }

  friend dd_real operator*(const dd_real& a, const dd_real& b) noexcept {
    auto p = eft::two_prod(a.hi_, b.hi_);
    if (!std::isfinite(p.r)) return raw(p.r, 0.0);
    p.e += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = eft::quick_two_sum(p.r, p.e);
    return raw(p.r, p.e);
  }

  friend dd_real operator*(const dd_real& a, double b) noexcept {
    auto p = eft::two_prod(a.hi_, b);
    if (!std::isfinite(p.r)) return raw(p.r, 0.0);
    p.e += a.lo_ * b;
    p = eft::quick_two_sum(p.r, p.e);
    return raw(p.r, p.e);
  }
  friend dd_real operator*(double a, const dd_real& b) noexcept { return b * a; }

  /// Long division with three partial quotients.
  friend dd_real operator/(const dd_real& a, const dd_real& b) noexcept {
    if (b.hi_ == 0.0 || !std::isfinite(a.hi_) || !std::isfinite(b.hi_)) {
      return raw(a.hi_ / b.hi_, 0.0);
    }
    const double q1 = a.hi_ / b.hi_;
    dd_real r = a - b * q1;
    const double q2 = r.hi_ / b.hi_;
    r = r - b * q2;
    const double q3 = r.hi_ / b.hi_;
    const auto q = eft::quick_two_sum(q1, q2);
    return raw(q.r, q.e) + q3;
  }
  friend dd_real operator/(const dd_real& a, double b) noexcept { return a / dd_real(b); }
  friend dd_real operator/(double a, const dd_real& b) noexcept { return dd_real(a) / b; }

  dd_real& operator+=(const dd_real& b) noexcept { return *this = *this + b; }
  dd_real& operator-=(const dd_real& b) noexcept { return *this = *this - b; }
  dd_real& operator*=(const dd_real& b) noexcept { return *this = *this * b; }
  dd_real& operator/=(const dd_real& b) noexcept { return *this = *this / b; }
  dd_real& operator+=(double b) noexcept { return *this = *this + b; }
  dd_real& operator-=(double b) noexcept { return *this = *this - b; }
  dd_real& operator*=(double b) noexcept { return *this = *this * b; }
  dd_real& operator/=(double b) noexcept { return *this = *this / b; }

  // -- comparison (lexicographic on normalized pairs) -------------------------

  friend bool operator==(const dd_real& a, const dd_real& b) noexcept {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend bool operator!=(const dd_real& a, const dd_real& b) noexcept { return !(a == b); }
  friend bool operator<(const dd_real& a, const dd_real& b) noexcept {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const dd_real& a, const dd_real& b) noexcept { return b < a; }
  friend bool operator<=(const dd_real& a, const dd_real& b) noexcept {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ <= b.lo_);
  }
  friend bool operator>=(const dd_real& a, const dd_real& b) noexcept { return b <= a; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

// -- elementary functions -----------------------------------------------------

inline dd_real abs(const dd_real& a) noexcept { return a.hi() < 0.0 ? -a : a; }
inline dd_real fabs(const dd_real& a) noexcept { return abs(a); }

inline bool isfinite(const dd_real& a) noexcept { return std::isfinite(a.hi()); }
inline bool isnan(const dd_real& a) noexcept { return std::isnan(a.hi()); }
inline bool isinf(const dd_real& a) noexcept { return std::isinf(a.hi()); }
inline bool signbit(const dd_real& a) noexcept { return std::signbit(a.hi()); }

inline double to_double(const dd_real& a) noexcept { return a.hi(); }
inline double to_double(double a) noexcept { return a; }

/// Exact scaling by 2^e (barring over/underflow of either component).
inline dd_real ldexp(const dd_real& a, int e) noexcept {
  return dd_real::raw(std::ldexp(a.hi(), e), std::ldexp(a.lo(), e));
}

inline dd_real sqr(const dd_real& a) noexcept {
  auto p = eft::two_sqr(a.hi());
  if (!std::isfinite(p.r)) return dd_real::raw(p.r, 0.0);
  p.e += 2.0 * a.hi() * a.lo();
  p.e += a.lo() * a.lo();
  p = eft::quick_two_sum(p.r, p.e);
  return dd_real::raw(p.r, p.e);
}

/// Square root by one Newton correction of the binary64 estimate.
/// A negative argument is a domain error and yields NaN.
inline dd_real sqrt(const dd_real& a) noexcept {
  if (a.hi() == 0.0) return a;
  if (std::isnan(a.hi()) || a.hi() < 0.0) return dd_real(std::numeric_limits<double>::quiet_NaN());
  if (std::isinf(a.hi())) return a;

  // Rescale by an even power of two so the squaring below can neither
  // overflow nor lose lo to underflow.
  int half_shift = 0;
  const int e = std::ilogb(a.hi());
  if (e > 900 || e < -900) half_shift = e / 2;
  const dd_real s = ldexp(a, -2 * half_shift);

  const double x = 1.0 / std::sqrt(s.hi());
  const double ax = s.hi() * x;
  const dd_real r = dd_real::from_sum(ax, (s - sqr(dd_real(ax))).hi() * (x * 0.5));
  return ldexp(r, half_shift);
}

inline dd_real max(const dd_real& a, const dd_real& b) noexcept { return a < b ? b : a; }
inline dd_real min(const dd_real& a, const dd_real& b) noexcept { return b < a ? b : a; }

/// Integral part toward -inf.
inline dd_real floor(const dd_real& a) noexcept {
  double hi = std::floor(a.hi());
  double lo = 0.0;
  if (hi == a.hi()) {
    lo = std::floor(a.lo());
    const auto s = eft::quick_two_sum(hi, lo);
    return dd_real::raw(s.r, s.e);
  }
  return dd_real(hi);
}

}  // namespace mpkit
