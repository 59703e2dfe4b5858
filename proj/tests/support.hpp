#pragma once

// Independent oracles shared by the unit tests and the acceptance runner:
// exact rationals and a 256-bit binary float from Boost.Multiprecision.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <random>

#include "mpkit/dd_real.hpp"

namespace mpkit::test {

using Rational = boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// Exact value of a finite double.
inline Rational exact(double x) {
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  Rational r(mant);
  const int shift = e - 53;
  boost::multiprecision::cpp_int p = 1;
  p <<= std::abs(shift);
  if (shift >= 0) return Rational(r * p);
  return Rational(r / p);
}

inline Rational exact(const dd_real& x) { return exact(x.hi()) + exact(x.lo()); }

inline Big big(const dd_real& x) { return Big(x.hi()) + Big(x.lo()); }

/// Doubles with random sign, full 53-bit significand and exponent in
/// [emin, emax].
class DoubleGen {
 public:
  DoubleGen(std::uint64_t seed, int emin, int emax) : eng_(seed), exp_(emin, emax) {}

  double operator()() {
    const auto bits = eng_();
    const double m = std::ldexp(static_cast<double>((bits >> 11) | (1ULL << 52)), -53);  // [0.5, 1)
    const double v = std::ldexp(m, exp_(eng_));
    return (bits & 1U) ? -v : v;
  }

  /// A normalized double-double: hi from operator(), lo below half an ulp.
  dd_real dd() {
    const double hi = (*this)();
    int e = 0;
    (void)std::frexp(hi, &e);
    const auto bits = eng_();
    double lo = std::ldexp(static_cast<double>(bits >> 11), e - 53 - 53 - 1);
    if (bits & 1U) lo = -lo;
    return dd_real::from_sum(hi, lo);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::uniform_int_distribution<int> exp_;
};

}  // namespace mpkit::test
