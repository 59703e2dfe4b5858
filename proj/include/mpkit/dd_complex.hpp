#pragma once

// Complex numbers over dd_real.

#include <algorithm>
#include <cmath>

#include "mpkit/dd_real.hpp"

namespace mpkit {

class dd_complex {
 public:
  constexpr dd_complex() noexcept = default;
  constexpr dd_complex(const dd_real& re) noexcept : re_(re) {}  // NOLINT
  constexpr dd_complex(double re) noexcept : re_(re) {}          // NOLINT
  constexpr dd_complex(int re) noexcept : re_(re) {}             // NOLINT
  constexpr dd_complex(const dd_real& re, const dd_real& im) noexcept : re_(re), im_(im) {}

  [[nodiscard]] constexpr const dd_real& real() const noexcept { return re_; }
  [[nodiscard]] constexpr const dd_real& imag() const noexcept { return im_; }

  friend dd_complex operator-(const dd_complex& a) noexcept { return {-a.re_, -a.im_}; }
  friend dd_complex operator+(const dd_complex& a, const dd_complex& b) noexcept {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend dd_complex operator-(const dd_complex& a, const dd_complex& b) noexcept {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend dd_complex operator*(const dd_complex& a, const dd_complex& b) noexcept {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend dd_complex operator*(const dd_complex& a, const dd_real& b) noexcept {
    return {a.re_ * b, a.im_ * b};
  }
  friend dd_complex operator*(const dd_real& a, const dd_complex& b) noexcept { return b * a; }

  /// Both operands are rescaled by powers of two so that neither the squared
  /// modulus of the divisor nor the numerator products over- or underflow.
  friend dd_complex operator/(const dd_complex& a, const dd_complex& b) noexcept {
    const double bmax = std::max(std::fabs(b.re_.hi()), std::fabs(b.im_.hi()));
    if (bmax == 0.0) {
      return {a.re_ / dd_real(0.0), a.im_ / dd_real(0.0)};
    }
    if (!std::isfinite(bmax) || !isfinite(a.re_) || !isfinite(a.im_)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return {dd_real(nan), dd_real(nan)};
    }
    const int kb = std::ilogb(bmax);
    const double amax = std::max(std::fabs(a.re_.hi()), std::fabs(a.im_.hi()));
    const int ka = amax == 0.0 ? 0 : std::ilogb(amax);
    const dd_real br = ldexp(b.re_, -kb);
    const dd_real bi = ldexp(b.im_, -kb);
    const dd_real ar = ldexp(a.re_, -ka);
    const dd_real ai = ldexp(a.im_, -ka);
    const dd_real den = br * br + bi * bi;
    const dd_real re = (ar * br + ai * bi) / den;
    const dd_real im = (ai * br - ar * bi) / den;
    return {ldexp(re, ka - kb), ldexp(im, ka - kb)};
  }

  dd_complex& operator+=(const dd_complex& b) noexcept { return *this = *this + b; }
  dd_complex& operator-=(const dd_complex& b) noexcept { return *this = *this - b; }
  dd_complex& operator*=(const dd_complex& b) noexcept { return *this = *this * b; }
  dd_complex& operator/=(const dd_complex& b) noexcept { return *this = *this / b; }

  friend bool operator==(const dd_complex& a, const dd_complex& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const dd_complex& a, const dd_complex& b) noexcept { return !(a == b); }

 private:
  dd_real re_;
  dd_real im_;
};

inline dd_complex conj(const dd_complex& a) noexcept { return {a.real(), -a.imag()}; }
inline const dd_real& real(const dd_complex& a) noexcept { return a.real(); }
inline const dd_real& imag(const dd_complex& a) noexcept { return a.imag(); }

/// Modulus with power-of-two scaling.
inline dd_real abs(const dd_complex& a) noexcept {
  const double m = std::max(std::fabs(a.real().hi()), std::fabs(a.imag().hi()));
  if (m == 0.0) return dd_real(0.0);
  if (!std::isfinite(m)) {
    if (isnan(a.real()) || isnan(a.imag())) return dd_real(std::numeric_limits<double>::quiet_NaN());
    return dd_real(std::numeric_limits<double>::infinity());
  }
  const int k = std::ilogb(m);
  const dd_real x = ldexp(a.real(), -k);
  const dd_real y = ldexp(a.imag(), -k);
  return ldexp(sqrt(x * x + y * y), k);
}

}  // namespace mpkit
