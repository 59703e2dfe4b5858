#pragma once

// The scalar concepts the BLAS/LAPACK templates are written against, and the
// binary64 overloads that let generic code call abs/sqrt/... unqualified.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

#include "mpkit/dd_complex.hpp"
#include "mpkit/dd_real.hpp"
#include "mpkit/machine_params.hpp"

namespace mpkit {

using index_t = std::int64_t;

inline double abs(double x) noexcept { return std::fabs(x); }
inline double fabs(double x) noexcept { return std::fabs(x); }
inline double sqrt(double x) noexcept { return std::sqrt(x); }
inline double sqr(double x) noexcept { return x * x; }
inline double floor(double x) noexcept { return std::floor(x); }
inline double ldexp(double x, int e) noexcept { return std::ldexp(x, e); }
inline double max(double a, double b) noexcept { return a < b ? b : a; }
inline double min(double a, double b) noexcept { return b < a ? b : a; }
inline bool isfinite(double x) noexcept { return std::isfinite(x); }
inline bool isnan(double x) noexcept { return std::isnan(x); }

template <class T>
concept Real = std::regular<T> && std::totally_ordered<T> && requires(T a, T b, int i, index_t n) {
  { T(i) } -> std::same_as<T>;
  { T(n) } -> std::same_as<T>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { abs(a) } -> std::convertible_to<T>;
  { sqrt(a) } -> std::convertible_to<T>;
  { to_double(a) } -> std::same_as<double>;
  { Rlamch<T>('E') } -> std::convertible_to<T>;
};

/// Element type of a Cgemm: a complex number with conjugation.
template <class C>
concept ComplexField = std::regular<C> && requires(C a, C b) {
  { a + b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { conj(a) } -> std::convertible_to<C>;
};

static_assert(Real<double>);
static_assert(Real<dd_real>);
static_assert(ComplexField<dd_complex>);
static_assert(ComplexField<std::complex<double>>);

template <class T>
struct precision_of;
template <>
struct precision_of<double> {
  static constexpr Precision value = Precision::binary64;
};
template <>
struct precision_of<dd_real> {
  static constexpr Precision value = Precision::double_double;
};

}  // namespace mpkit
