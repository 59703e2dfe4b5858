#pragma once

// LU and Cholesky factorizations, triangular solves and inversion.
// Return value is LAPACK's info: 0 success, -i bad argument i, k > 0 a
// numerical failure at step k.

#include <algorithm>
#include <span>

#include "mpkit/lapack/aux.hpp"

namespace mpkit {

/// P*A = L*U with partial pivoting (unblocked). Pivots are the first row
/// index of maximal |a(i, j)|; ipiv is 1-based.
template <Real T>
index_t Rgetrf(index_t m, index_t n, std::span<T> a, index_t lda, std::span<index_t> ipiv) {
  if (m < 0) return -1;
  if (n < 0) return -2;
  if (lda < std::max<index_t>(1, m)) return -4;
  if (m == 0 || n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  const T sfmin = Rlamch<T>('S');
  index_t info = 0;
  const index_t mn = std::min(m, n);
  for (index_t j = 0; j < mn; ++j) {
    const index_t jp = j + iRamax<T>(m - j, detail::sub(a, j + j * lda), 1) - 1;
    ipiv[j] = jp + 1;
    if (A(jp, j) != T(0)) {
      if (jp != j) Rswap<T>(n, detail::sub(a, j), lda, detail::sub(a, jp), lda);
      if (j < m - 1) {
        if (abs(A(j, j)) >= sfmin) {
          Rscal<T>(m - j - 1, T(1) / A(j, j), detail::sub(a, j + 1 + j * lda), 1);
        } else {
          for (index_t i = j + 1; i < m; ++i) A(i, j) = A(i, j) / A(j, j);
        }
      }
    } else if (info == 0) {
      info = j + 1;
    }
    if (j < mn - 1) {
      (void)Rger<T>(m - j - 1, n - j - 1, T(-1), detail::sub(a, j + 1 + j * lda), 1,
                    detail::sub(a, j + (j + 1) * lda), lda, detail::sub(a, j + 1 + (j + 1) * lda), lda);
    }
  }
  return info;
}

/// Solves A*X = B or A'*X = B with the factors from Rgetrf. Returns k > 0
/// without touching B when U(k, k) is exactly zero.
template <Real T>
index_t Rgetrs(char trans, index_t n, index_t nrhs, std::span<const T> a, index_t lda,
               std::span<const index_t> ipiv, std::span<T> b, index_t ldb) {
  const bool notran = lsame(trans, 'N');
  if (!notran && !lsame(trans, 'T') && !lsame(trans, 'C')) return -1;
  if (n < 0) return -2;
  if (nrhs < 0) return -3;
  if (lda < std::max<index_t>(1, n)) return -5;
  if (ldb < std::max<index_t>(1, n)) return -8;
  if (n == 0 || nrhs == 0) return 0;
  for (index_t k = 0; k < n; ++k)
    if (a[k + k * lda] == T(0)) return k + 1;
  if (notran) {
    Rlaswp<T>(nrhs, b, ldb, 1, n, ipiv, 1);
    (void)Rtrsm<T>('L', 'L', 'N', 'U', n, nrhs, T(1), a, lda, b, ldb);
    (void)Rtrsm<T>('L', 'U', 'N', 'N', n, nrhs, T(1), a, lda, b, ldb);
  } else {
    (void)Rtrsm<T>('L', 'U', 'T', 'N', n, nrhs, T(1), a, lda, b, ldb);
    (void)Rtrsm<T>('L', 'L', 'T', 'U', n, nrhs, T(1), a, lda, b, ldb);
    Rlaswp<T>(nrhs, b, ldb, 1, n, ipiv, -1);
  }
  return 0;
}

/// In-place inverse of a triangular matrix (unblocked).
template <Real T>
index_t Rtrtri(char uplo, char diag, index_t n, std::span<T> a, index_t lda) {
  const bool upper = lsame(uplo, 'U');
  const bool nounit = lsame(diag, 'N');
  if (!upper && !lsame(uplo, 'L')) return -1;
  if (!nounit && !lsame(diag, 'U')) return -2;
  if (n < 0) return -3;
  if (lda < std::max<index_t>(1, n)) return -5;
  if (n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  if (nounit) {
    for (index_t k = 0; k < n; ++k)
      if (A(k, k) == T(0)) return k + 1;
  }
  if (upper) {
    for (index_t j = 0; j < n; ++j) {
      T ajj(-1);
      if (nounit) {
        A(j, j) = T(1) / A(j, j);
        ajj = -A(j, j);
      }
      (void)Rtrmv<T>('U', 'N', diag, j, a, lda, detail::sub(a, j * lda), 1);
      Rscal<T>(j, ajj, detail::sub(a, j * lda), 1);
    }
  } else {
    for (index_t j = n - 1; j >= 0; --j) {
      T ajj(-1);
      if (nounit) {
        A(j, j) = T(1) / A(j, j);
        ajj = -A(j, j);
      }
      if (j < n - 1) {
        (void)Rtrmv<T>('L', 'N', diag, n - j - 1, detail::sub(a, j + 1 + (j + 1) * lda), lda,
                       detail::sub(a, j + 1 + j * lda), 1);
        Rscal<T>(n - j - 1, ajj, detail::sub(a, j + 1 + j * lda), 1);
      }
    }
  }
  return 0;
}

/// Inverse from the Rgetrf factors. lwork == -1 is a size query: the
/// required size is stored in work[0].
template <Real T>
index_t Rgetri(index_t n, std::span<T> a, index_t lda, std::span<const index_t> ipiv, std::span<T> work,
               index_t lwork) {
  const bool lquery = lwork == -1;
  const index_t minwrk = std::max<index_t>(1, n);
  if (n < 0) return -1;
  if (lda < std::max<index_t>(1, n)) return -3;
  if (lwork < minwrk && !lquery) return -6;
  if (!work.empty()) work[0] = T(minwrk);
  if (lquery || n == 0) return 0;

  if (const index_t info = Rtrtri<T>('U', 'N', n, a, lda); info > 0) return info;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  // Solve inv(A)*L = inv(U) column by column from the right.
  for (index_t j = n - 1; j >= 0; --j) {
    for (index_t i = j + 1; i < n; ++i) {
      work[i] = A(i, j);
      A(i, j) = T(0);
    }
    if (j < n - 1) {
      (void)Rgemv<T>('N', n, n - j - 1, T(-1), detail::sub(a, (j + 1) * lda), lda, detail::sub(work, j + 1), 1,
                     T(1), detail::sub(a, j * lda), 1);
    }
  }
  for (index_t j = n - 2; j >= 0; --j) {
    const index_t jp = ipiv[j] - 1;
    if (jp != j) Rswap<T>(n, detail::sub(a, j * lda), 1, detail::sub(a, jp * lda), 1);
  }
  return 0;
}

/// Cholesky factorization A = U'*U or L*L' (unblocked). Returns k > 0 if
/// the leading minor of order k is not positive.
template <Real T>
index_t Rpotrf(char uplo, index_t n, std::span<T> a, index_t lda) {
  const bool upper = lsame(uplo, 'U');
  if (!upper && !lsame(uplo, 'L')) return -1;
  if (n < 0) return -2;
  if (lda < std::max<index_t>(1, n)) return -4;
  if (n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  for (index_t j = 0; j < n; ++j) {
    T ajj;
    if (upper) {
      ajj = A(j, j) - Rdot<T>(j, detail::sub(a, j * lda), 1, detail::sub(a, j * lda), 1);
    } else {
      ajj = A(j, j) - Rdot<T>(j, detail::sub(a, j), lda, detail::sub(a, j), lda);
    }
    if (ajj <= T(0) || isnan(ajj)) {
      A(j, j) = ajj;
      return j + 1;
    }
    ajj = sqrt(ajj);
    A(j, j) = ajj;
    if (j < n - 1) {
      if (upper) {
        (void)Rgemv<T>('T', j, n - j - 1, T(-1), detail::sub(a, (j + 1) * lda), lda, detail::sub(a, j * lda), 1,
                       T(1), detail::sub(a, j + (j + 1) * lda), lda);
        Rscal<T>(n - j - 1, T(1) / ajj, detail::sub(a, j + (j + 1) * lda), lda);
      } else {
        (void)Rgemv<T>('N', n - j - 1, j, T(-1), detail::sub(a, j + 1), lda, detail::sub(a, j), lda, T(1),
                       detail::sub(a, j + 1 + j * lda), 1);
        Rscal<T>(n - j - 1, T(1) / ajj, detail::sub(a, j + 1 + j * lda), 1);
      }
    }
  }
  return 0;
}

}  // namespace mpkit
