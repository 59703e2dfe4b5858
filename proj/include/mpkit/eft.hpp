#pragma once

// Error-free transforms on binary64.
//
// Every routine returns a pair (r, e) with r == fl(op(a, b)) and
// r + e == op(a, b) exactly, as long as no intermediate overflows.
// Non-finite results are returned with e == 0.

#include <cmath>

namespace mpkit::eft {

struct Split {
  double r;
  double e;
};

#if defined(__FMA__) || defined(MPKIT_FORCE_FMA)
inline constexpr bool kTwoProdUsesFma = true;
#else
inline constexpr bool kTwoProdUsesFma = false;
#endif

/// Knuth's branch-free two-sum; no ordering of |a|, |b| required.
inline Split two_sum(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) return {s, 0.0};
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline Split two_diff(double a, double b) noexcept {
  const double s = a - b;
  if (!std::isfinite(s)) return {s, 0.0};
  const double bb = s - a;
  const double e = (a - (s - bb)) - (b + bb);
  return {s, e};
}

/// Dekker's fast two-sum. Requires |a| >= |b| (or a == 0).
inline Split quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  if (!std::isfinite(s)) return {s, 0.0};
  return {s, b - (s - a)};
}

/// Veltkamp split of a into 26- and 27-bit halves, hi + lo == a.
inline Split veltkamp_split(double a) noexcept {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double t = kSplitter * a;
  const double hi = t - (t - a);
  return {hi, a - hi};
}

inline Split two_prod_dekker(double a, double b) noexcept {
  const double p = a * b;
  if (!std::isfinite(p)) return {p, 0.0};
  const auto [ah, al] = veltkamp_split(a);
  const auto [bh, bl] = veltkamp_split(b);
  const double e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
  return {p, e};
}

inline Split two_prod_fma(double a, double b) noexcept {
  const double p = a * b;
  if (!std::isfinite(p)) return {p, 0.0};
  return {p, std::fma(a, b, -p)};
}

inline Split two_prod(double a, double b) noexcept {
  if constexpr (kTwoProdUsesFma) {
    return two_prod_fma(a, b);
  } else {
    return two_prod_dekker(a, b);
  }
}

inline Split two_sqr(double a) noexcept { return two_prod(a, a); }

inline const char* two_prod_method() noexcept {
  return kTwoProdUsesFma ? "fma" : "dekker-split";
}

}  // namespace mpkit::eft
