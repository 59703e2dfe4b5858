#pragma once

// Precision-generic BLAS subset. Argument lists, loop orders and error
// numbering follow the reference BLAS; storage is column-major with 0-based
// offsets, element (i,j) of A at a[i + j*lda].

#include <algorithm>
#include <span>

#include "mpkit/blas_error.hpp"
#include "mpkit/real.hpp"

namespace mpkit {

namespace detail {

/// Offset of the first element visited for a vector of length n.
inline index_t start(index_t n, index_t inc) noexcept { return inc > 0 ? 0 : -(n - 1) * inc; }

/// Block length of the fixed-shape dot-product reduction.
inline constexpr index_t kDotBlock = 4096;

template <class T>
T dot_block(index_t first, index_t last, std::span<const T> x, index_t kx, index_t incx,
            std::span<const T> y, index_t ky, index_t incy) {
  T s(0);
  for (index_t i = first; i < last; ++i) s += x[kx + i * incx] * y[ky + i * incy];
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------- level 1 --

template <Real T>
void Rscal(index_t n, const T& alpha, std::span<T> x, index_t incx) {
  if (n <= 0 || incx <= 0) return;
  for (index_t i = 0; i < n; ++i) x[i * incx] *= alpha;
}

template <Real T>
void Rcopy(index_t n, std::span<const T> x, index_t incx, std::span<T> y, index_t incy) {
  if (n <= 0) return;
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  for (index_t i = 0; i < n; ++i) y[ky + i * incy] = x[kx + i * incx];
}

template <Real T>
void Rswap(index_t n, std::span<T> x, index_t incx, std::span<T> y, index_t incy) {
  if (n <= 0) return;
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  for (index_t i = 0; i < n; ++i) std::swap(x[kx + i * incx], y[ky + i * incy]);
}

/// y <- alpha*x + y
template <Real T>
void Raxpy(index_t n, const T& alpha, std::span<const T> x, index_t incx, std::span<T> y, index_t incy) {
  if (n <= 0 || alpha == T(0)) return;
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  for (index_t i = 0; i < n; ++i) y[ky + i * incy] += alpha * x[kx + i * incx];
}

/// Sum of x_i*y_i in ascending index order within blocks of kDotBlock
/// elements; block sums are added left to right. Identical for any n to
/// Rdot_par.
template <Real T>
T Rdot(index_t n, std::span<const T> x, index_t incx, std::span<const T> y, index_t incy) {
  if (n <= 0) return T(0);
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  T total(0);
  for (index_t b = 0; b < n; b += detail::kDotBlock) {
    total += detail::dot_block(b, std::min(n, b + detail::kDotBlock), x, kx, incx, y, ky, incy);
  }
  return total;
}

/// Euclidean norm with running scale/sum-of-squares.
template <Real T>
T Rnrm2(index_t n, std::span<const T> x, index_t incx) {
  if (n < 1 || incx < 1) return T(0);
  if (n == 1) return abs(x[0]);
  T scale(0);
  T ssq(1);
  for (index_t i = 0; i < n; ++i) {
    const T& xi = x[i * incx];
    if (xi != T(0)) {
      const T a = abs(xi);
      if (scale < a) {
        const T r = scale / a;
        ssq = T(1) + ssq * r * r;
        scale = a;
      } else {
        const T r = a / scale;
        ssq += r * r;
      }
    }
  }
  return scale * sqrt(ssq);
}

template <Real T>
T Rasum(index_t n, std::span<const T> x, index_t incx) {
  T s(0);
  if (n <= 0 || incx <= 0) return s;
  for (index_t i = 0; i < n; ++i) s += abs(x[i * incx]);
  return s;
}

/// 1-based index of the first element of largest magnitude; 0 if n < 1.
template <Real T>
index_t iRamax(index_t n, std::span<const T> x, index_t incx) {
  if (n < 1 || incx <= 0) return 0;
  index_t best = 1;
  T m = abs(x[0]);
  for (index_t i = 1; i < n; ++i) {
    const T a = abs(x[i * incx]);
    if (a > m) {
      best = i + 1;
      m = a;
    }
  }
  return best;
}

/// Plane rotation (x, y) <- (c*x + s*y, c*y - s*x).
template <Real T>
void Rrot(index_t n, std::span<T> x, index_t incx, std::span<T> y, index_t incy, const T& c, const T& s) {
  if (n <= 0) return;
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  for (index_t i = 0; i < n; ++i) {
    T& xi = x[kx + i * incx];
    T& yi = y[ky + i * incy];
    const T t = c * xi + s * yi;
    yi = c * yi - s * xi;
    xi = t;
  }
}

// ---------------------------------------------------------------- level 2 --

/// y <- alpha*op(A)*x + beta*y
template <Real T>
BlasStatus Rgemv(char trans, index_t m, index_t n, const T& alpha, std::span<const T> a, index_t lda,
                 std::span<const T> x, index_t incx, const T& beta, std::span<T> y, index_t incy) {
  int info = 0;
  if (!lsame(trans, 'N') && !lsame(trans, 'T') && !lsame(trans, 'C')) {
    info = 1;
  } else if (m < 0) {
    info = 2;
  } else if (n < 0) {
    info = 3;
  } else if (lda < std::max<index_t>(1, m)) {
    info = 6;
  } else if (incx == 0) {
    info = 8;
  } else if (incy == 0) {
    info = 11;
  }
  if (info != 0) return BlasError{"Rgemv", info};
  if (m == 0 || n == 0 || (alpha == T(0) && beta == T(1))) return {};

  const bool notrans = lsame(trans, 'N');
  const index_t lenx = notrans ? n : m;
  const index_t leny = notrans ? m : n;
  const index_t kx = detail::start(lenx, incx);
  const index_t ky = detail::start(leny, incy);

  if (beta != T(1)) {
    for (index_t i = 0; i < leny; ++i) {
      T& yi = y[ky + i * incy];
      yi = beta == T(0) ? T(0) : beta * yi;
    }
  }
  if (alpha == T(0)) return {};
  if (notrans) {
    for (index_t j = 0; j < n; ++j) {
      const T temp = alpha * x[kx + j * incx];
      for (index_t i = 0; i < m; ++i) y[ky + i * incy] += temp * a[i + j * lda];
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      T temp(0);
      for (index_t i = 0; i < m; ++i) temp += a[i + j * lda] * x[kx + i * incx];
      y[ky + j * incy] += alpha * temp;
    }
  }
  return {};
}

/// A <- alpha*x*y' + A
template <Real T>
BlasStatus Rger(index_t m, index_t n, const T& alpha, std::span<const T> x, index_t incx, std::span<const T> y,
                index_t incy, std::span<T> a, index_t lda) {
  int info = 0;
  if (m < 0) {
    info = 1;
  } else if (n < 0) {
    info = 2;
  } else if (incx == 0) {
    info = 5;
  } else if (incy == 0) {
    info = 7;
  } else if (lda < std::max<index_t>(1, m)) {
    info = 9;
  }
  if (info != 0) return BlasError{"Rger", info};
  if (m == 0 || n == 0 || alpha == T(0)) return {};
  const index_t kx = detail::start(m, incx);
  const index_t ky = detail::start(n, incy);
  for (index_t j = 0; j < n; ++j) {
    const T& yj = y[ky + j * incy];
    if (yj != T(0)) {
      const T temp = alpha * yj;
      for (index_t i = 0; i < m; ++i) a[i + j * lda] += x[kx + i * incx] * temp;
    }
  }
  return {};
}

/// y <- alpha*A*x + beta*y, A symmetric, only the uplo triangle referenced.
template <Real T>
BlasStatus Rsymv(char uplo, index_t n, const T& alpha, std::span<const T> a, index_t lda, std::span<const T> x,
                 index_t incx, const T& beta, std::span<T> y, index_t incy) {
  int info = 0;
  if (!lsame(uplo, 'U') && !lsame(uplo, 'L')) {
    info = 1;
  } else if (n < 0) {
    info = 2;
  } else if (lda < std::max<index_t>(1, n)) {
    info = 5;
  } else if (incx == 0) {
    info = 7;
  } else if (incy == 0) {
    info = 10;
  }
  if (info != 0) return BlasError{"Rsymv", info};
  if (n == 0 || (alpha == T(0) && beta == T(1))) return {};
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  auto X = [&](index_t i) -> const T& { return x[kx + i * incx]; };
  auto Y = [&](index_t i) -> T& { return y[ky + i * incy]; };

  if (beta != T(1)) {
    for (index_t i = 0; i < n; ++i) Y(i) = beta == T(0) ? T(0) : beta * Y(i);
  }
  if (alpha == T(0)) return {};
  if (lsame(uplo, 'U')) {
    for (index_t j = 0; j < n; ++j) {
      const T temp1 = alpha * X(j);
      T temp2(0);
      for (index_t i = 0; i < j; ++i) {
        Y(i) += temp1 * a[i + j * lda];
        temp2 += a[i + j * lda] * X(i);
      }
      Y(j) += temp1 * a[j + j * lda] + alpha * temp2;
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      const T temp1 = alpha * X(j);
      T temp2(0);
      Y(j) += temp1 * a[j + j * lda];
      for (index_t i = j + 1; i < n; ++i) {
        Y(i) += temp1 * a[i + j * lda];
        temp2 += a[i + j * lda] * X(i);
      }
      Y(j) += alpha * temp2;
    }
  }
  return {};
}

/// A <- alpha*x*y' + alpha*y*x' + A on the uplo triangle.
template <Real T>
BlasStatus Rsyr2(char uplo, index_t n, const T& alpha, std::span<const T> x, index_t incx, std::span<const T> y,
                 index_t incy, std::span<T> a, index_t lda) {
  int info = 0;
  if (!lsame(uplo, 'U') && !lsame(uplo, 'L')) {
    info = 1;
  } else if (n < 0) {
    info = 2;
  } else if (incx == 0) {
    info = 5;
  } else if (incy == 0) {
    info = 7;
  } else if (lda < std::max<index_t>(1, n)) {
    info = 9;
  }
  if (info != 0) return BlasError{"Rsyr2", info};
  if (n == 0 || alpha == T(0)) return {};
  const index_t kx = detail::start(n, incx);
  const index_t ky = detail::start(n, incy);
  auto X = [&](index_t i) -> const T& { return x[kx + i * incx]; };
  auto Y = [&](index_t i) -> const T& { return y[ky + i * incy]; };
  const bool upper = lsame(uplo, 'U');
  for (index_t j = 0; j < n; ++j) {
    if (X(j) != T(0) || Y(j) != T(0)) {
      const T temp1 = alpha * Y(j);
      const T temp2 = alpha * X(j);
      const index_t lo = upper ? 0 : j;
      const index_t hi = upper ? j + 1 : n;
      for (index_t i = lo; i < hi; ++i) a[i + j * lda] += X(i) * temp1 + Y(i) * temp2;
    }
  }
  return {};
}

/// x <- op(A)*x, A triangular.
template <Real T>
BlasStatus Rtrmv(char uplo, char trans, char diag, index_t n, std::span<const T> a, index_t lda, std::span<T> x,
                 index_t incx) {
  int info = 0;
  if (!lsame(uplo, 'U') && !lsame(uplo, 'L')) {
    info = 1;
  } else if (!lsame(trans, 'N') && !lsame(trans, 'T') && !lsame(trans, 'C')) {
    info = 2;
  } else if (!lsame(diag, 'U') && !lsame(diag, 'N')) {
    info = 3;
  } else if (n < 0) {
    info = 4;
  } else if (lda < std::max<index_t>(1, n)) {
    info = 6;
  } else if (incx == 0) {
    info = 8;
  }
  if (info != 0) return BlasError{"Rtrmv", info};
  if (n == 0) return {};
  const bool nounit = lsame(diag, 'N');
  const index_t kx = detail::start(n, incx);
  auto X = [&](index_t i) -> T& { return x[kx + i * incx]; };
  auto A = [&](index_t i, index_t j) -> const T& { return a[i + j * lda]; };

  if (lsame(trans, 'N')) {
    if (lsame(uplo, 'U')) {
      for (index_t j = 0; j < n; ++j) {
        if (X(j) != T(0)) {
          const T temp = X(j);
          for (index_t i = 0; i < j; ++i) X(i) += temp * A(i, j);
          if (nounit) X(j) *= A(j, j);
        }
      }
    } else {
      for (index_t j = n - 1; j >= 0; --j) {
        if (X(j) != T(0)) {
          const T temp = X(j);
          for (index_t i = n - 1; i > j; --i) X(i) += temp * A(i, j);
          if (nounit) X(j) *= A(j, j);
        }
      }
    }
  } else {
    if (lsame(uplo, 'U')) {
      for (index_t j = n - 1; j >= 0; --j) {
        T temp = X(j);
        if (nounit) temp *= A(j, j);
        for (index_t i = j - 1; i >= 0; --i) temp += A(i, j) * X(i);
        X(j) = temp;
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        T temp = X(j);
        if (nounit) temp *= A(j, j);
        for (index_t i = j + 1; i < n; ++i) temp += A(i, j) * X(i);
        X(j) = temp;
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------- level 3 --

/// C <- alpha*op(A)*op(B) + beta*C
namespace detail {

/// Reference DGEMM argument check; 0 or the 1-based index of the bad argument.
inline int gemm_check(char transa, char transb, index_t m, index_t n, index_t k, index_t lda, index_t ldb,
                      index_t ldc) {
  const bool nota = lsame(transa, 'N');
  const bool notb = lsame(transb, 'N');
  const index_t nrowa = nota ? m : k;
  const index_t nrowb = notb ? k : n;
  if (!nota && !lsame(transa, 'C') && !lsame(transa, 'T')) return 1;
  if (!notb && !lsame(transb, 'C') && !lsame(transb, 'T')) return 2;
  if (m < 0) return 3;
  if (n < 0) return 4;
  if (k < 0) return 5;
  if (lda < std::max<index_t>(1, nrowa)) return 8;
  if (ldb < std::max<index_t>(1, nrowb)) return 10;
  if (ldc < std::max<index_t>(1, m)) return 13;
  return 0;
}

}  // namespace detail

/// C <- alpha*op(A)*op(B) + beta*C
template <Real T>
BlasStatus Rgemm(char transa, char transb, index_t m, index_t n, index_t k, const T& alpha, std::span<const T> a,
                 index_t lda, std::span<const T> b, index_t ldb, const T& beta, std::span<T> c, index_t ldc) {
  const bool nota = lsame(transa, 'N');
  const bool notb = lsame(transb, 'N');
  const int info = detail::gemm_check(transa, transb, m, n, k, lda, ldb, ldc);
  if (info != 0) return BlasError{"Rgemm", info};
  if (m == 0 || n == 0 || ((alpha == T(0) || k == 0) && beta == T(1))) return {};

  auto A = [&](index_t i, index_t j) -> const T& { return a[i + j * lda]; };
  auto B = [&](index_t i, index_t j) -> const T& { return b[i + j * ldb]; };
  auto C = [&](index_t i, index_t j) -> T& { return c[i + j * ldc]; };
  auto scale_column = [&](index_t j) {
    if (beta == T(0)) {
      for (index_t i = 0; i < m; ++i) C(i, j) = T(0);
    } else if (beta != T(1)) {
      for (index_t i = 0; i < m; ++i) C(i, j) = beta * C(i, j);
    }
  };

  if (alpha == T(0)) {
    for (index_t j = 0; j < n; ++j) scale_column(j);
    return {};
  }
  if (notb) {
    if (nota) {
      for (index_t j = 0; j < n; ++j) {
        scale_column(j);
        for (index_t l = 0; l < k; ++l) {
          const T temp = alpha * B(l, j);
          for (index_t i = 0; i < m; ++i) C(i, j) += temp * A(i, l);
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = 0; i < m; ++i) {
          T temp(0);
          for (index_t l = 0; l < k; ++l) temp += A(l, i) * B(l, j);
          C(i, j) = beta == T(0) ? alpha * temp : alpha * temp + beta * C(i, j);
        }
      }
    }
  } else {
    if (nota) {
      for (index_t j = 0; j < n; ++j) {
        scale_column(j);
        for (index_t l = 0; l < k; ++l) {
          const T temp = alpha * B(j, l);
          for (index_t i = 0; i < m; ++i) C(i, j) += temp * A(i, l);
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = 0; i < m; ++i) {
          T temp(0);
          for (index_t l = 0; l < k; ++l) temp += A(l, i) * B(j, l);
          C(i, j) = beta == T(0) ? alpha * temp : alpha * temp + beta * C(i, j);
        }
      }
    }
  }
  return {};
}

/// C <- alpha*A*A' + beta*C (trans 'N') or alpha*A'*A + beta*C, uplo triangle only.
template <Real T>
BlasStatus Rsyrk(char uplo, char trans, index_t n, index_t k, const T& alpha, std::span<const T> a, index_t lda,
                 const T& beta, std::span<T> c, index_t ldc) {
  const bool notrans = lsame(trans, 'N');
  const index_t nrowa = notrans ? n : k;
  const bool upper = lsame(uplo, 'U');
  int info = 0;
  if (!upper && !lsame(uplo, 'L')) {
    info = 1;
  } else if (!notrans && !lsame(trans, 'T') && !lsame(trans, 'C')) {
    info = 2;
  } else if (n < 0) {
    info = 3;
  } else if (k < 0) {
    info = 4;
  } else if (lda < std::max<index_t>(1, nrowa)) {
    info = 7;
  } else if (ldc < std::max<index_t>(1, n)) {
    info = 10;
  }
  if (info != 0) return BlasError{"Rsyrk", info};
  if (n == 0 || ((alpha == T(0) || k == 0) && beta == T(1))) return {};

  auto A = [&](index_t i, index_t j) -> const T& { return a[i + j * lda]; };
  auto C = [&](index_t i, index_t j) -> T& { return c[i + j * ldc]; };
  auto row_lo = [&](index_t j) { return upper ? index_t{0} : j; };
  auto row_hi = [&](index_t j) { return upper ? j + 1 : n; };

  if (alpha == T(0)) {
    for (index_t j = 0; j < n; ++j)
      for (index_t i = row_lo(j); i < row_hi(j); ++i) C(i, j) = beta == T(0) ? T(0) : beta * C(i, j);
    return {};
  }
  if (notrans) {
    for (index_t j = 0; j < n; ++j) {
      if (beta == T(0)) {
        for (index_t i = row_lo(j); i < row_hi(j); ++i) C(i, j) = T(0);
      } else if (beta != T(1)) {
        for (index_t i = row_lo(j); i < row_hi(j); ++i) C(i, j) = beta * C(i, j);
      }
      for (index_t l = 0; l < k; ++l) {
        if (A(j, l) != T(0)) {
          const T temp = alpha * A(j, l);
          for (index_t i = row_lo(j); i < row_hi(j); ++i) C(i, j) += temp * A(i, l);
        }
      }
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      for (index_t i = row_lo(j); i < row_hi(j); ++i) {
        T temp(0);
        for (index_t l = 0; l < k; ++l) temp += A(l, i) * A(l, j);
        C(i, j) = beta == T(0) ? alpha * temp : alpha * temp + beta * C(i, j);
      }
    }
  }
  return {};
}

/// Solves op(A)*X = alpha*B (side 'L') or X*op(A) = alpha*B (side 'R');
/// X overwrites B.
template <Real T>
BlasStatus Rtrsm(char side, char uplo, char transa, char diag, index_t m, index_t n, const T& alpha,
                 std::span<const T> a, index_t lda, std::span<T> b, index_t ldb) {
  const bool lside = lsame(side, 'L');
  const index_t nrowa = lside ? m : n;
  const bool nounit = lsame(diag, 'N');
  const bool upper = lsame(uplo, 'U');
  int info = 0;
  if (!lside && !lsame(side, 'R')) {
    info = 1;
  } else if (!upper && !lsame(uplo, 'L')) {
    info = 2;
  } else if (!lsame(transa, 'N') && !lsame(transa, 'T') && !lsame(transa, 'C')) {
    info = 3;
  } else if (!lsame(diag, 'U') && !lsame(diag, 'N')) {
    info = 4;
  } else if (m < 0) {
    info = 5;
  } else if (n < 0) {
    info = 6;
  } else if (lda < std::max<index_t>(1, nrowa)) {
    info = 9;
  } else if (ldb < std::max<index_t>(1, m)) {
    info = 11;
  }
  if (info != 0) return BlasError{"Rtrsm", info};
  if (m == 0 || n == 0) return {};

  auto A = [&](index_t i, index_t j) -> const T& { return a[i + j * lda]; };
  auto B = [&](index_t i, index_t j) -> T& { return b[i + j * ldb]; };

  if (alpha == T(0)) {
    for (index_t j = 0; j < n; ++j)
      for (index_t i = 0; i < m; ++i) B(i, j) = T(0);
    return {};
  }

  if (lside) {
    if (lsame(transa, 'N')) {
      // B <- alpha*inv(A)*B
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, j) = alpha * B(i, j);
          for (index_t k = m - 1; k >= 0; --k) {
            if (B(k, j) != T(0)) {
              if (nounit) B(k, j) = B(k, j) / A(k, k);
              for (index_t i = 0; i < k; ++i) B(i, j) -= B(k, j) * A(i, k);
            }
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, j) = alpha * B(i, j);
          for (index_t k = 0; k < m; ++k) {
            if (B(k, j) != T(0)) {
              if (nounit) B(k, j) = B(k, j) / A(k, k);
              for (index_t i = k + 1; i < m; ++i) B(i, j) -= B(k, j) * A(i, k);
            }
          }
        }
      }
    } else {
      // B <- alpha*inv(A')*B
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = 0; i < m; ++i) {
            T temp = alpha * B(i, j);
            for (index_t k = 0; k < i; ++k) temp -= A(k, i) * B(k, j);
            if (nounit) temp = temp / A(i, i);
            B(i, j) = temp;
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = m - 1; i >= 0; --i) {
            T temp = alpha * B(i, j);
            for (index_t k = i + 1; k < m; ++k) temp -= A(k, i) * B(k, j);
            if (nounit) temp = temp / A(i, i);
            B(i, j) = temp;
          }
        }
      }
    }
  } else {
    if (lsame(transa, 'N')) {
      // B <- alpha*B*inv(A)
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, j) = alpha * B(i, j);
          for (index_t k = 0; k < j; ++k) {
            if (A(k, j) != T(0))
              for (index_t i = 0; i < m; ++i) B(i, j) -= A(k, j) * B(i, k);
          }
          if (nounit) {
            const T temp = T(1) / A(j, j);
            for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
          }
        }
      } else {
        for (index_t j = n - 1; j >= 0; --j) {
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, j) = alpha * B(i, j);
          for (index_t k = j + 1; k < n; ++k) {
            if (A(k, j) != T(0))
              for (index_t i = 0; i < m; ++i) B(i, j) -= A(k, j) * B(i, k);
          }
          if (nounit) {
            const T temp = T(1) / A(j, j);
            for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
          }
        }
      }
    } else {
      // B <- alpha*B*inv(A')
      if (upper) {
        for (index_t k = n - 1; k >= 0; --k) {
          if (nounit) {
            const T temp = T(1) / A(k, k);
            for (index_t i = 0; i < m; ++i) B(i, k) = temp * B(i, k);
          }
          for (index_t j = 0; j < k; ++j) {
            if (A(j, k) != T(0)) {
              const T temp = A(j, k);
              for (index_t i = 0; i < m; ++i) B(i, j) -= temp * B(i, k);
            }
          }
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, k) = alpha * B(i, k);
        }
      } else {
        for (index_t k = 0; k < n; ++k) {
          if (nounit) {
            const T temp = T(1) / A(k, k);
            for (index_t i = 0; i < m; ++i) B(i, k) = temp * B(i, k);
          }
          for (index_t j = k + 1; j < n; ++j) {
            if (A(j, k) != T(0)) {
              const T temp = A(j, k);
              for (index_t i = 0; i < m; ++i) B(i, j) -= temp * B(i, k);
            }
          }
          if (alpha != T(1))
            for (index_t i = 0; i < m; ++i) B(i, k) = alpha * B(i, k);
        }
      }
    }
  }
  return {};
}

/// Complex C <- alpha*op(A)*op(B) + beta*C, op in {N, T, C (conjugate transpose)}.
template <ComplexField Z>
BlasStatus Cgemm(char transa, char transb, index_t m, index_t n, index_t k, const Z& alpha, std::span<const Z> a,
                 index_t lda, std::span<const Z> b, index_t ldb, const Z& beta, std::span<Z> c, index_t ldc) {
  const bool nota = lsame(transa, 'N');
  const bool notb = lsame(transb, 'N');
  const bool conja = lsame(transa, 'C');
  const bool conjb = lsame(transb, 'C');
  const index_t nrowa = nota ? m : k;
  const index_t nrowb = notb ? k : n;
  int info = 0;
  if (!nota && !conja && !lsame(transa, 'T')) {
    info = 1;
  } else if (!notb && !conjb && !lsame(transb, 'T')) {
    info = 2;
  } else if (m < 0) {
    info = 3;
  } else if (n < 0) {
    info = 4;
  } else if (k < 0) {
    info = 5;
  } else if (lda < std::max<index_t>(1, nrowa)) {
    info = 8;
  } else if (ldb < std::max<index_t>(1, nrowb)) {
    info = 10;
  } else if (ldc < std::max<index_t>(1, m)) {
    info = 13;
  }
  if (info != 0) return BlasError{"Cgemm", info};
  const Z zero(0);
  const Z one(1);
  if (m == 0 || n == 0 || ((alpha == zero || k == 0) && beta == one)) return {};

  auto opA = [&](index_t i, index_t l) -> Z {
    if (nota) return a[i + l * lda];
    return conja ? Z(conj(a[l + i * lda])) : a[l + i * lda];
  };
  auto opB = [&](index_t l, index_t j) -> Z {
    if (notb) return b[l + j * ldb];
    return conjb ? Z(conj(b[j + l * ldb])) : b[j + l * ldb];
  };
  auto C = [&](index_t i, index_t j) -> Z& { return c[i + j * ldc]; };

  for (index_t j = 0; j < n; ++j) {
    if (nota) {
      if (beta == zero) {
        for (index_t i = 0; i < m; ++i) C(i, j) = zero;
      } else if (beta != one) {
        for (index_t i = 0; i < m; ++i) C(i, j) = beta * C(i, j);
      }
      if (alpha == zero) continue;
      for (index_t l = 0; l < k; ++l) {
        const Z temp = alpha * opB(l, j);
        for (index_t i = 0; i < m; ++i) C(i, j) += temp * a[i + l * lda];
      }
    } else {
      for (index_t i = 0; i < m; ++i) {
        if (alpha == zero) {
          C(i, j) = beta == zero ? zero : beta * C(i, j);
          continue;
        }
        Z temp = zero;
        for (index_t l = 0; l < k; ++l) temp += opA(i, l) * opB(l, j);
        C(i, j) = beta == zero ? alpha * temp : alpha * temp + beta * C(i, j);
      }
    }
  }
  return {};
}

}  // namespace mpkit
