#pragma once

// Threaded variants of Raxpy, Rdot and Rgemm. Work is split over disjoint
// output ranges and every output element is computed with exactly the
// operations of the sequential kernel, so results are bitwise identical to
// it for any thread count.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "mpkit/mpblas.hpp"

namespace mpkit {

/// MPKIT_THREADS if set to a positive integer, else the number of hardware
/// threads (at least 1).
inline int default_threads() {
  if (const char* env = std::getenv("MPKIT_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace detail {

/// Runs body(lo, hi) over a balanced split of [0, n) into at most t parts.
template <class F>
void parallel_ranges(index_t n, int t, F&& body) {
  const index_t parts = std::max<index_t>(1, std::min<index_t>(t, n));
  if (parts == 1) {
    body(index_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(parts - 1));
  const index_t base = n / parts;
  const index_t extra = n % parts;
  index_t lo = 0;
  index_t first_hi = 0;
  for (index_t p = 0; p < parts; ++p) {
    const index_t hi = lo + base + (p < extra ? 1 : 0);
    if (p == 0) {
      first_hi = hi;
    } else {
      pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    lo = hi;
  }
  body(index_t{0}, first_hi);
  for (auto& th : pool) th.join();
}

}  // namespace detail

template <Real T>
void Raxpy_par(index_t n, const T& alpha, std::span<const T> x, index_t incx, std::span<T> y, index_t incy,
               int threads) {
  if (n <= 0 || alpha == T(0)) return;
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  detail::parallel_ranges(n, threads, [&](index_t lo, index_t hi) {
    for (index_t i = lo; i < hi; ++i) y[ky + i * incy] += alpha * x[kx + i * incx];
  });
}

template <Real T>
T Rdot_par(index_t n, std::span<const T> x, index_t incx, std::span<const T> y, index_t incy, int threads) {
  if (n <= 0) return T(0);
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  const index_t nblocks = (n + detail::kDotBlock - 1) / detail::kDotBlock;
  std::vector<T> partial(static_cast<std::size_t>(nblocks));
  detail::parallel_ranges(nblocks, threads, [&](index_t lo, index_t hi) {
    for (index_t blk = lo; blk < hi; ++blk) {
      const index_t first = blk * detail::kDotBlock;
      partial[static_cast<std::size_t>(blk)] =
          detail::dot_block(first, std::min(n, first + detail::kDotBlock), x, kx, incx, y, ky, incy);
    }
  });
  T total(0);
  for (const T& p : partial) total += p;
  return total;
}

/// Column panels of C are computed concurrently by the sequential kernel.
template <Real T>
BlasStatus Rgemm_par(char transa, char transb, index_t m, index_t n, index_t k, const T& alpha,
                     std::span<const T> a, index_t lda, std::span<const T> b, index_t ldb, const T& beta,
                     std::span<T> c, index_t ldc, int threads) {
  if (const int info = detail::gemm_check(transa, transb, m, n, k, lda, ldb, ldc); info != 0) {
    return BlasError{"Rgemm", info};
  }
  if (m == 0 || n == 0) return {};
  const bool notb = lsame(transb, 'N');
  detail::parallel_ranges(n, threads, [&](index_t lo, index_t hi) {
    const index_t b_off = notb ? lo * ldb : lo;
    (void)Rgemm<T>(transa, transb, m, hi - lo, k, alpha, a, lda, b.subspan(static_cast<std::size_t>(b_off)), ldb,
                   beta, c.subspan(static_cast<std::size_t>(lo * ldc)), ldc);
  });
  return {};
}

}  // namespace mpkit
