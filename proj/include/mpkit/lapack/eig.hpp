#pragma once

// Symmetric eigenproblem (tridiagonal reduction + implicit QL/QR) and the
// real Schur factorization (Hessenberg reduction + double-shift QR).

#include <algorithm>
#include <span>

#include "mpkit/lapack/aux.hpp"

namespace mpkit {

/// Reduces a symmetric matrix to tridiagonal form Q'*A*Q = T (unblocked).
template <Real T>
index_t Rsytrd(char uplo, index_t n, std::span<T> a, index_t lda, std::span<T> d, std::span<T> e,
               std::span<T> tau) {
  const bool upper = lsame(uplo, 'U');
  if (!upper && !lsame(uplo, 'L')) return -1;
  if (n < 0) return -2;
  if (lda < std::max<index_t>(1, n)) return -4;
  if (n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  using detail::sub;
  if (upper) {
    for (index_t i = n - 2; i >= 0; --i) {
      T taui;
      Rlarfg<T>(i + 1, A(i, i + 1), sub(a, (i + 1) * lda), 1, taui);
      e[i] = A(i, i + 1);
      if (taui != T(0)) {
        A(i, i + 1) = T(1);
        (void)Rsymv<T>(uplo, i + 1, taui, a, lda, sub(a, (i + 1) * lda), 1, T(0), tau, 1);
        const T alpha = T(-0.5) * taui * Rdot<T>(i + 1, tau, 1, sub(a, (i + 1) * lda), 1);
        Raxpy<T>(i + 1, alpha, sub(a, (i + 1) * lda), 1, tau, 1);
        (void)Rsyr2<T>(uplo, i + 1, T(-1), sub(a, (i + 1) * lda), 1, tau, 1, a, lda);
        A(i, i + 1) = e[i];
      }
      d[i + 1] = A(i + 1, i + 1);
      tau[i] = taui;
    }
    d[0] = A(0, 0);
  } else {
    for (index_t i = 0; i < n - 1; ++i) {
      T taui;
      Rlarfg<T>(n - i - 1, A(i + 1, i), sub(a, std::min(i + 2, n - 1) + i * lda), 1, taui);
      e[i] = A(i + 1, i);
      if (taui != T(0)) {
        A(i + 1, i) = T(1);
        (void)Rsymv<T>(uplo, n - i - 1, taui, sub(a, i + 1 + (i + 1) * lda), lda, sub(a, i + 1 + i * lda), 1, T(0),
                       sub(tau, i), 1);
        const T alpha = T(-0.5) * taui * Rdot<T>(n - i - 1, sub(tau, i), 1, sub(a, i + 1 + i * lda), 1);
        Raxpy<T>(n - i - 1, alpha, sub(a, i + 1 + i * lda), 1, sub(tau, i), 1);
        (void)Rsyr2<T>(uplo, n - i - 1, T(-1), sub(a, i + 1 + i * lda), 1, sub(tau, i), 1,
                       sub(a, i + 1 + (i + 1) * lda), lda);
        A(i + 1, i) = e[i];
      }
      d[i] = A(i, i);
      tau[i] = taui;
    }
    d[n - 1] = A(n - 1, n - 1);
  }
  return 0;
}

/// Forms the orthogonal Q of Rsytrd explicitly. work needs n - 1 entries.
template <Real T>
index_t Rorgtr(char uplo, index_t n, std::span<T> a, index_t lda, std::span<const T> tau, std::span<T> work) {
  const bool upper = lsame(uplo, 'U');
  if (!upper && !lsame(uplo, 'L')) return -1;
  if (n < 0) return -2;
  if (lda < std::max<index_t>(1, n)) return -4;
  if (n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  if (upper) {
    for (index_t j = 0; j < n - 1; ++j) {
      for (index_t i = 0; i < j; ++i) A(i, j) = A(i, j + 1);
      A(n - 1, j) = T(0);
    }
    for (index_t i = 0; i < n - 1; ++i) A(i, n - 1) = T(0);
    A(n - 1, n - 1) = T(1);
    Rorg2l<T>(n - 1, n - 1, n - 1, a, lda, tau, work);
  } else {
    for (index_t j = n - 1; j >= 1; --j) {
      A(0, j) = T(0);
      for (index_t i = j + 1; i < n; ++i) A(i, j) = A(i, j - 1);
    }
    A(0, 0) = T(1);
    for (index_t i = 1; i < n; ++i) A(i, 0) = T(0);
    if (n > 1) Rorg2r<T>(n - 1, n - 1, n - 1, detail::sub(a, 1 + lda), lda, tau, work);
  }
  return 0;
}

/// Eigenvalues (and optionally eigenvectors) of the symmetric tridiagonal
/// matrix (d, e) by implicit QL/QR. compz: 'N' values only, 'V' update the
/// orthogonal Z passed in, 'I' start from Z = I. work needs 2n - 2 entries
/// when vectors are computed. On success d is ascending. Returns the count
/// of unconverged off-diagonals if 30n sweeps are exhausted.
template <Real T>
index_t Rsteqr(char compz, index_t n, std::span<T> d, std::span<T> e, std::span<T> z, index_t ldz,
               std::span<T> work) {
  int icompz = -1;
  if (lsame(compz, 'N')) icompz = 0;
  if (lsame(compz, 'V')) icompz = 1;
  if (lsame(compz, 'I')) icompz = 2;
  if (icompz < 0) return -1;
  if (n < 0) return -2;
  if (ldz < 1 || (icompz > 0 && ldz < std::max<index_t>(1, n))) return -6;
  if (n == 0) return 0;
  auto Z = [&](index_t i, index_t j) -> T& { return z[i + j * ldz]; };
  if (n == 1) {
    if (icompz == 2) Z(0, 0) = T(1);
    return 0;
  }
  using detail::sub;

  const T eps = Rlamch<T>('E');
  const T safmin = Rlamch<T>('S');
  const T safmax = T(1) / safmin;
  const T ssfmax = sqrt(safmax) / T(3);
  const T ssfmin = sqrt(safmin) / (eps * eps);

  if (icompz == 2) Rlaset<T>(n, n, T(0), T(1), z, ldz);

  const index_t nmaxit = n * 30;
  index_t jtot = 0;
  // Work with 1-based indices l, m, lend as in the reference algorithm.
  auto D = [&](index_t i) -> T& { return d[i - 1]; };
  auto E = [&](index_t i) -> T& { return e[i - 1]; };
  auto small = [&](index_t i) { return abs(E(i)) <= eps * (abs(D(i)) + abs(D(i + 1))) + safmin; };

  index_t l1 = 1;
  const index_t nm1 = n - 1;
  while (l1 <= n) {
    if (l1 > 1) E(l1 - 1) = T(0);
    index_t m = n;
    for (index_t mm = l1; mm <= nm1; ++mm) {
      const T tst = abs(E(mm));
      if (tst == T(0) || tst <= (sqrt(abs(D(mm))) * sqrt(abs(D(mm + 1)))) * eps) {
        E(mm) = T(0);
        m = mm;
        break;
      }
    }
    index_t l = l1;
    const index_t lsv = l;
    index_t lend = m;
    const index_t lendsv = lend;
    l1 = m + 1;
    if (lend == l) continue;

    // Scale the unreduced block.
    const T anorm = Rlanst_max<T>(lend - l + 1, sub(d, l - 1), sub(e, l - 1));
    int iscale = 0;
    if (anorm == T(0)) continue;
    if (anorm > ssfmax) {
      iscale = 1;
      Rlascl<T>('G', anorm, ssfmax, lend - l + 1, 1, sub(d, l - 1), n);
      Rlascl<T>('G', anorm, ssfmax, lend - l, 1, sub(e, l - 1), n);
    }
    if (anorm < ssfmin) {
      iscale = 2;
      Rlascl<T>('G', anorm, ssfmin, lend - l + 1, 1, sub(d, l - 1), n);
      Rlascl<T>('G', anorm, ssfmin, lend - l, 1, sub(e, l - 1), n);
    }

    // QL when the larger end is at the top, QR otherwise.
    if (abs(D(lend)) < abs(D(l))) {
      lend = lsv;
      l = lendsv;
    }

    if (lend > l) {
      // QL iteration.
      for (;;) {
        m = lend;
        for (index_t mm = l; mm <= lend - 1; ++mm) {
          if (small(mm)) {
            m = mm;
            break;
          }
        }
        if (m < lend) E(m) = T(0);
        T p = D(l);
        if (m == l) {
          D(l) = p;
          ++l;
          if (l <= lend) continue;
          break;
        }
        if (m == l + 1) {
          T rt1, rt2;
          if (icompz > 0) {
            T c, s;
            Rlaev2(D(l), E(l), D(l + 1), rt1, rt2, c, s);
            work[l - 1] = c;
            work[n - 1 + l - 1] = s;
            Rlasr<T>('R', 'B', n, 2, sub(work, l - 1), sub(work, n - 1 + l - 1), sub(z, (l - 1) * ldz), ldz);
          } else {
            Rlae2(D(l), E(l), D(l + 1), rt1, rt2);
          }
          D(l) = rt1;
          D(l + 1) = rt2;
          E(l) = T(0);
          l += 2;
          if (l <= lend) continue;
          break;
        }
        if (jtot == nmaxit) break;
        ++jtot;

        T g = (D(l + 1) - p) / (T(2) * E(l));
        T r = Rlapy2(g, T(1));
        g = D(m) - p + (E(l) / (g + detail::sign(r, g)));
        T s(1);
        T c(1);
        p = T(0);
        for (index_t i = m - 1; i >= l; --i) {
          const T f = s * E(i);
          const T b = c * E(i);
          Rlartg(g, f, c, s, r);
          if (i != m - 1) E(i + 1) = r;
          g = D(i + 1) - p;
          r = (D(i) - g) * s + T(2) * c * b;
          p = s * r;
          D(i + 1) = g + p;
          g = c * r - b;
          if (icompz > 0) {
            work[i - 1] = c;
            work[n - 1 + i - 1] = -s;
          }
        }
        if (icompz > 0) {
          Rlasr<T>('R', 'B', n, m - l + 1, sub(work, l - 1), sub(work, n - 1 + l - 1), sub(z, (l - 1) * ldz), ldz);
        }
        D(l) = D(l) - p;
        E(l) = g;
      }
    } else {
      // QR iteration.
      for (;;) {
        m = lend;
        for (index_t mm = l; mm >= lend + 1; --mm) {
          if (small(mm - 1)) {
            m = mm;
            break;
          }
        }
        if (m > lend) E(m - 1) = T(0);
        T p = D(l);
        if (m == l) {
          D(l) = p;
          --l;
          if (l >= lend) continue;
          break;
        }
        if (m == l - 1) {
          T rt1, rt2;
          if (icompz > 0) {
            T c, s;
            Rlaev2(D(l - 1), E(l - 1), D(l), rt1, rt2, c, s);
            work[m - 1] = c;
            work[n - 1 + m - 1] = s;
            Rlasr<T>('R', 'F', n, 2, sub(work, m - 1), sub(work, n - 1 + m - 1), sub(z, (l - 2) * ldz), ldz);
          } else {
            Rlae2(D(l - 1), E(l - 1), D(l), rt1, rt2);
          }
          D(l - 1) = rt1;
          D(l) = rt2;
          E(l - 1) = T(0);
          l -= 2;
          if (l >= lend) continue;
          break;
        }
        if (jtot == nmaxit) break;
        ++jtot;

        T g = (D(l - 1) - p) / (T(2) * E(l - 1));
        T r = Rlapy2(g, T(1));
        g = D(m) - p + (E(l - 1) / (g + detail::sign(r, g)));
        T s(1);
        T c(1);
        p = T(0);
        for (index_t i = m; i <= l - 1; ++i) {
          const T f = s * E(i);
          const T b = c * E(i);
          Rlartg(g, f, c, s, r);
          if (i != m) E(i - 1) = r;
          g = D(i) - p;
          r = (D(i + 1) - g) * s + T(2) * c * b;
          p = s * r;
          D(i) = g + p;
          g = c * r - b;
          if (icompz > 0) {
            work[i - 1] = c;
            work[n - 1 + i - 1] = s;
          }
        }
        if (icompz > 0) {
          Rlasr<T>('R', 'F', n, l - m + 1, sub(work, m - 1), sub(work, n - 1 + m - 1), sub(z, (m - 1) * ldz), ldz);
        }
        D(l) = D(l) - p;
        E(l - 1) = g;
      }
    }

    if (iscale == 1) {
      Rlascl<T>('G', ssfmax, anorm, lendsv - lsv + 1, 1, sub(d, lsv - 1), n);
      Rlascl<T>('G', ssfmax, anorm, lendsv - lsv, 1, sub(e, lsv - 1), n);
    } else if (iscale == 2) {
      Rlascl<T>('G', ssfmin, anorm, lendsv - lsv + 1, 1, sub(d, lsv - 1), n);
      Rlascl<T>('G', ssfmin, anorm, lendsv - lsv, 1, sub(e, lsv - 1), n);
    }
    if (jtot >= nmaxit) {
      index_t info = 0;
      for (index_t i = 0; i < n - 1; ++i)
        if (e[i] != T(0)) ++info;
      return info;
    }
  }

  // Ascending order; selection sort keeps vector swaps to one per slot.
  if (icompz == 0) {
    std::sort(d.begin(), d.begin() + n);
  } else {
    for (index_t ii = 1; ii < n; ++ii) {
      const index_t i = ii - 1;
      index_t k = i;
      T p = d[i];
      for (index_t j = ii; j < n; ++j) {
        if (d[j] < p) {
          k = j;
          p = d[j];
        }
      }
      if (k != i) {
        d[k] = d[i];
        d[i] = p;
        Rswap<T>(n, sub(z, i * ldz), 1, sub(z, k * ldz), 1);
      }
    }
  }
  return 0;
}

/// Minimum lwork of Rsyev.
inline index_t syev_lwork(index_t n) { return std::max<index_t>(1, 3 * n - 1); }

/// All eigenvalues, ascending in w, and optionally (jobz 'V') the
/// orthonormal eigenvectors, overwriting A. lwork == -1 queries the size.
template <Real T>
index_t Rsyev(char jobz, char uplo, index_t n, std::span<T> a, index_t lda, std::span<T> w, std::span<T> work,
              index_t lwork) {
  const bool wantz = lsame(jobz, 'V');
  const bool lquery = lwork == -1;
  if (!wantz && !lsame(jobz, 'N')) return -1;
  if (!lsame(uplo, 'U') && !lsame(uplo, 'L')) return -2;
  if (n < 0) return -3;
  if (lda < std::max<index_t>(1, n)) return -5;
  if (lwork < syev_lwork(n) && !lquery) return -8;
  if (!work.empty()) work[0] = T(syev_lwork(n));
  if (lquery || n == 0) return 0;
  if (n == 1) {
    w[0] = a[0];
    if (wantz) a[0] = T(1);
    return 0;
  }

  const T safmin = Rlamch<T>('S');
  const T eps = Rlamch<T>('P');
  const T smlnum = safmin / eps;
  const T bignum = T(1) / smlnum;
  const T rmin = sqrt(smlnum);
  const T rmax = sqrt(bignum);

  const T anrm = Rlansy_max<T>(uplo, n, a, lda);
  bool scaled = false;
  T sigma(1);
  if (anrm > T(0) && anrm < rmin) {
    scaled = true;
    sigma = rmin / anrm;
  } else if (anrm > rmax) {
    scaled = true;
    sigma = rmax / anrm;
  }
  if (scaled) Rlascl<T>(lsame(uplo, 'U') ? 'U' : 'L', T(1), sigma, n, n, a, lda);

  using detail::sub;
  auto e = work.subspan(0, static_cast<std::size_t>(n));
  auto tau = sub(work, n);
  auto rest = sub(work, 2 * n);
  (void)Rsytrd<T>(uplo, n, a, lda, w, e, tau);
  index_t info = 0;
  if (!wantz) {
    info = Rsteqr<T>('N', n, w, e, a, lda, tau);
  } else {
    (void)Rorgtr<T>(uplo, n, a, lda, tau, rest);
    info = Rsteqr<T>('V', n, w, e, a, lda, tau);
  }
  if (scaled) Rscal<T>(info == 0 ? n : info - 1, T(1) / sigma, w, 1);
  work[0] = T(syev_lwork(n));
  return info;
}

/// Reduces rows/columns ilo..ihi (1-based) of A to upper Hessenberg form
/// Q'*A*Q = H (unblocked). work needs n entries.
template <Real T>
index_t Rgehrd(index_t n, index_t ilo, index_t ihi, std::span<T> a, index_t lda, std::span<T> tau,
               std::span<T> work) {
  if (n < 0) return -1;
  if (ilo < 1 || ilo > std::max<index_t>(1, n)) return -2;
  if (ihi < std::min(ilo, n) || ihi > n) return -3;
  if (lda < std::max<index_t>(1, n)) return -5;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  using detail::sub;
  for (index_t i = ilo - 1; i < ihi - 1; ++i) {
    // Annihilate A(i+2:ihi, i).
    Rlarfg<T>(ihi - i - 1, A(i + 1, i), sub(a, std::min(i + 2, n - 1) + i * lda), 1, tau[i]);
    const T aii = A(i + 1, i);
    A(i + 1, i) = T(1);
    Rlarf<T>('R', ihi, ihi - i - 1, sub(a, i + 1 + i * lda), 1, tau[i], sub(a, (i + 1) * lda), lda, work);
    Rlarf<T>('L', ihi - i - 1, n - i - 1, sub(a, i + 1 + i * lda), 1, tau[i], sub(a, i + 1 + (i + 1) * lda), lda,
             work);
    A(i + 1, i) = aii;
  }
  return 0;
}

/// Forms the orthogonal Q of Rgehrd explicitly. work needs n entries.
template <Real T>
index_t Rorghr(index_t n, index_t ilo, index_t ihi, std::span<T> a, index_t lda, std::span<const T> tau,
               std::span<T> work) {
  if (n < 0) return -1;
  if (ilo < 1 || ilo > std::max<index_t>(1, n)) return -2;
  if (ihi < std::min(ilo, n) || ihi > n) return -3;
  if (lda < std::max<index_t>(1, n)) return -5;
  if (n == 0) return 0;
  auto A = [&](index_t i, index_t j) -> T& { return a[(i - 1) + (j - 1) * lda]; };
  const index_t nh = ihi - ilo;
  for (index_t j = ihi; j >= ilo + 1; --j) {
    for (index_t i = 1; i <= j - 1; ++i) A(i, j) = T(0);
    for (index_t i = j + 1; i <= ihi; ++i) A(i, j) = A(i, j - 1);
    for (index_t i = ihi + 1; i <= n; ++i) A(i, j) = T(0);
  }
  for (index_t j = 1; j <= ilo; ++j) {
    for (index_t i = 1; i <= n; ++i) A(i, j) = T(0);
    A(j, j) = T(1);
  }
  for (index_t j = ihi + 1; j <= n; ++j) {
    for (index_t i = 1; i <= n; ++i) A(i, j) = T(0);
    A(j, j) = T(1);
  }
  if (nh > 0) Rorg2r<T>(nh, nh, nh, detail::sub(a, ilo + ilo * lda), lda, detail::sub(tau, ilo - 1), work);
  return 0;
}

/// Double-shift QR on the upper Hessenberg H, rows/columns ilo..ihi
/// (1-based). wantt: compute the full Schur form T; wantz: accumulate the
/// transformations into rows iloz..ihiz of Z. Returns i > 0 if the
/// iteration failed; wr/wi then hold eigenvalues i+1..ihi.
template <Real T>
index_t Rlahqr(bool wantt, bool wantz, index_t n, index_t ilo, index_t ihi, std::span<T> h, index_t ldh,
               std::span<T> wr, std::span<T> wi, index_t iloz, index_t ihiz, std::span<T> z, index_t ldz) {
  if (n == 0) return 0;
  auto H = [&](index_t i, index_t j) -> T& { return h[(i - 1) + (j - 1) * ldh]; };
  auto Zm = [&](index_t i, index_t j) -> T& { return z[(i - 1) + (j - 1) * ldz]; };
  auto WR = [&](index_t i) -> T& { return wr[i - 1]; };
  auto WI = [&](index_t i) -> T& { return wi[i - 1]; };
  if (ilo == ihi) {
    WR(ilo) = H(ilo, ilo);
    WI(ilo) = T(0);
    return 0;
  }
  for (index_t j = ilo; j <= ihi - 3; ++j) {
    H(j + 2, j) = T(0);
    H(j + 3, j) = T(0);
  }
  if (ilo <= ihi - 2) H(ihi, ihi - 2) = T(0);

  const index_t nh = ihi - ilo + 1;
  const index_t nz = ihiz - iloz + 1;
  const T safmin = Rlamch<T>('S');
  const T ulp = Rlamch<T>('P');
  const T smlnum = safmin * (T(nh) / ulp);
  const T dat1(0.75);
  const T dat2(-0.4375);
  constexpr index_t kexsh = 10;

  index_t i1 = 1;
  index_t i2 = n;
  const index_t itmax = 30 * std::max<index_t>(10, nh);
  index_t kdefl = 0;

  index_t i = ihi;
  while (i >= ilo) {
    index_t l = ilo;
    bool converged = false;
    for (index_t its = 0; its <= itmax; ++its) {
      // Look for a single small subdiagonal element.
      index_t k = i;
      for (; k >= l + 1; --k) {
        if (abs(H(k, k - 1)) <= smlnum) break;
        T tst = abs(H(k - 1, k - 1)) + abs(H(k, k));
        if (tst == T(0)) {
          if (k - 2 >= ilo) tst += abs(H(k - 1, k - 2));
          if (k + 1 <= ihi) tst += abs(H(k + 1, k));
        }
        if (abs(H(k, k - 1)) <= ulp * tst) {
          const T ab = max(abs(H(k, k - 1)), abs(H(k - 1, k)));
          const T ba = min(abs(H(k, k - 1)), abs(H(k - 1, k)));
          const T aa = max(abs(H(k, k)), abs(H(k - 1, k - 1) - H(k, k)));
          const T bb = min(abs(H(k, k)), abs(H(k - 1, k - 1) - H(k, k)));
          const T s = aa + ab;
          if (ba * (ab / s) <= max(smlnum, ulp * (bb * (aa / s)))) break;
        }
      }
      l = k;
      if (l > ilo) H(l, l - 1) = T(0);
      if (l >= i - 1) {
        converged = true;
        break;
      }
      ++kdefl;
      if (!wantt) {
        i1 = l;
        i2 = i;
      }

      T h11, h12, h21, h22;
      if (kdefl % (2 * kexsh) == 0) {
        const T s = abs(H(i, i - 1)) + abs(H(i - 1, i - 2));
        h11 = dat1 * s + H(i, i);
        h12 = dat2 * s;
        h21 = s;
        h22 = h11;
      } else if (kdefl % kexsh == 0) {
        const T s = abs(H(l + 1, l)) + abs(H(l + 2, l + 1));
        h11 = dat1 * s + H(l, l);
        h12 = dat2 * s;
        h21 = s;
        h22 = h11;
      } else {
        h11 = H(i - 1, i - 1);
        h21 = H(i, i - 1);
        h12 = H(i - 1, i);
        h22 = H(i, i);
      }
      T rt1r, rt1i, rt2r, rt2i;
      {
        const T s = abs(h11) + abs(h12) + abs(h21) + abs(h22);
        if (s == T(0)) {
          rt1r = rt1i = rt2r = rt2i = T(0);
        } else {
          h11 /= s;
          h21 /= s;
          h12 /= s;
          h22 /= s;
          const T tr = (h11 + h22) / T(2);
          const T det = (h11 - tr) * (h22 - tr) - h12 * h21;
          const T rtdisc = sqrt(abs(det));
          if (det >= T(0)) {
            rt1r = tr * s;
            rt2r = rt1r;
            rt1i = rtdisc * s;
            rt2i = -rt1i;
          } else {
            rt1r = tr + rtdisc;
            rt2r = tr - rtdisc;
            if (abs(rt1r - h22) <= abs(rt2r - h22)) {
              rt1r *= s;
              rt2r = rt1r;
            } else {
              rt2r *= s;
              rt1r = rt2r;
            }
            rt1i = rt2i = T(0);
          }
        }
      }

      // Look for two consecutive small subdiagonal elements.
      T v[3];
      index_t m = i - 2;
      for (; m >= l; --m) {
        T h21s = H(m + 1, m);
        T s = abs(H(m, m) - rt2r) + abs(rt2i) + abs(h21s);
        h21s = H(m + 1, m) / s;
        v[0] = h21s * H(m, m + 1) + (H(m, m) - rt1r) * ((H(m, m) - rt2r) / s) - rt1i * (rt2i / s);
        v[1] = h21s * (H(m, m) + H(m + 1, m + 1) - rt1r - rt2r);
        v[2] = h21s * H(m + 2, m + 1);
        s = abs(v[0]) + abs(v[1]) + abs(v[2]);
        v[0] /= s;
        v[1] /= s;
        v[2] /= s;
        if (m == l) break;
        const T h00 = abs(H(m, m - 1)) * (abs(v[1]) + abs(v[2]));
        const T h01 = abs(v[0]) * (abs(H(m - 1, m - 1)) + abs(H(m, m)) + abs(H(m + 1, m + 1)));
        if (h00 <= ulp * h01) break;
      }

      // Double-shift QR step.
      for (index_t kk = m; kk <= i - 1; ++kk) {
        const index_t nr = std::min<index_t>(3, i - kk + 1);
        if (kk > m) {
          for (index_t t = 0; t < nr; ++t) v[t] = H(kk + t, kk - 1);
        }
        T t1;
        Rlarfg<T>(nr, v[0], std::span<T>(v + 1, 2), 1, t1);
        if (kk > m) {
          H(kk, kk - 1) = v[0];
          H(kk + 1, kk - 1) = T(0);
          if (kk < i - 1) H(kk + 2, kk - 1) = T(0);
        } else if (m > l) {
          H(kk, kk - 1) = H(kk, kk - 1) * (T(1) - t1);
        }
        const T v2 = v[1];
        const T t2 = t1 * v2;
        if (nr == 3) {
          const T v3 = v[2];
          const T t3 = t1 * v3;
          for (index_t j = kk; j <= i2; ++j) {
            const T sum = H(kk, j) + v2 * H(kk + 1, j) + v3 * H(kk + 2, j);
            H(kk, j) -= sum * t1;
            H(kk + 1, j) -= sum * t2;
            H(kk + 2, j) -= sum * t3;
          }
          for (index_t j = i1; j <= std::min(kk + 3, i); ++j) {
            const T sum = H(j, kk) + v2 * H(j, kk + 1) + v3 * H(j, kk + 2);
            H(j, kk) -= sum * t1;
            H(j, kk + 1) -= sum * t2;
            H(j, kk + 2) -= sum * t3;
          }
          if (wantz) {
            for (index_t j = iloz; j <= ihiz; ++j) {
              const T sum = Zm(j, kk) + v2 * Zm(j, kk + 1) + v3 * Zm(j, kk + 2);
              Zm(j, kk) -= sum * t1;
              Zm(j, kk + 1) -= sum * t2;
              Zm(j, kk + 2) -= sum * t3;
            }
          }
        } else if (nr == 2) {
          for (index_t j = kk; j <= i2; ++j) {
            const T sum = H(kk, j) + v2 * H(kk + 1, j);
            H(kk, j) -= sum * t1;
            H(kk + 1, j) -= sum * t2;
          }
          for (index_t j = i1; j <= i; ++j) {
            const T sum = H(j, kk) + v2 * H(j, kk + 1);
            H(j, kk) -= sum * t1;
            H(j, kk + 1) -= sum * t2;
          }
          if (wantz) {
            for (index_t j = iloz; j <= ihiz; ++j) {
              const T sum = Zm(j, kk) + v2 * Zm(j, kk + 1);
              Zm(j, kk) -= sum * t1;
              Zm(j, kk + 1) -= sum * t2;
            }
          }
        }
      }
    }
    if (!converged) return i;

    if (l == i) {
      WR(i) = H(i, i);
      WI(i) = T(0);
    } else if (l == i - 1) {
      T cs, sn;
      Rlanv2(H(i - 1, i - 1), H(i - 1, i), H(i, i - 1), H(i, i), WR(i - 1), WI(i - 1), WR(i), WI(i), cs, sn);
      if (wantt) {
        if (i2 > i) {
          Rrot<T>(i2 - i, detail::sub(h, (i - 2) + i * ldh), ldh, detail::sub(h, (i - 1) + i * ldh), ldh, cs, sn);
        }
        Rrot<T>(i - i1 - 1, detail::sub(h, (i1 - 1) + (i - 2) * ldh), 1, detail::sub(h, (i1 - 1) + (i - 1) * ldh), 1,
                cs, sn);
      }
      if (wantz) {
        Rrot<T>(nz, detail::sub(z, (iloz - 1) + (i - 2) * ldz), 1, detail::sub(z, (iloz - 1) + (i - 1) * ldz), 1, cs,
                sn);
      }
    }
    kdefl = 0;
    i = l - 1;
  }
  return 0;
}

/// Minimum lwork of Rgees.
inline index_t gees_lwork(index_t n) { return std::max<index_t>(1, 3 * n); }

/// Real Schur factorization A = Z*T*Z' without eigenvalue reordering. T
/// overwrites A (upper quasi-triangular, 2x2 blocks in standard form); wr,
/// wi are the eigenvalues in the order of the diagonal of T; Z goes to vs
/// when jobvs is 'V'. lwork == -1 queries the size. Returns i > 0 if the QR
/// iteration failed; wr/wi then hold eigenvalues i+1..n.
template <Real T>
index_t Rgees(char jobvs, index_t n, std::span<T> a, index_t lda, std::span<T> wr, std::span<T> wi,
              std::span<T> vs, index_t ldvs, std::span<T> work, index_t lwork) {
  const bool wantvs = lsame(jobvs, 'V');
  const bool lquery = lwork == -1;
  if (!wantvs && !lsame(jobvs, 'N')) return -1;
  if (n < 0) return -2;
  if (lda < std::max<index_t>(1, n)) return -4;
  if (ldvs < 1 || (wantvs && ldvs < n)) return -8;
  if (lwork < gees_lwork(n) && !lquery) return -10;
  if (!work.empty()) work[0] = T(gees_lwork(n));
  if (lquery || n == 0) return 0;

  const T eps = Rlamch<T>('P');
  const T smlnum = sqrt(Rlamch<T>('S')) / eps;
  const T bignum = T(1) / smlnum;
  const T anrm = Rlange<T>('M', n, n, a, lda);
  bool scalea = false;
  T cscale(1);
  if (anrm > T(0) && anrm < smlnum) {
    scalea = true;
    cscale = smlnum;
  } else if (anrm > bignum) {
    scalea = true;
    cscale = bignum;
  }
  if (scalea) Rlascl<T>('G', anrm, cscale, n, n, a, lda);

  using detail::sub;
  auto tau = work.subspan(0, static_cast<std::size_t>(n));
  auto rest = sub(work, n);
  (void)Rgehrd<T>(n, 1, n, a, lda, tau, rest);
  if (wantvs) {
    Rlacpy<T>('L', n, n, a, lda, vs, ldvs);
    (void)Rorghr<T>(n, 1, n, vs, ldvs, tau, rest);
  }
  const index_t ieval = Rlahqr<T>(true, wantvs, n, 1, n, a, lda, wr, wi, 1, n, vs, ldvs);
  if (n > 2) {
    for (index_t j = 0; j < n - 2; ++j)
      for (index_t i = j + 2; i < n; ++i) a[i + j * lda] = T(0);
  }
  if (scalea) {
    Rlascl<T>('H', cscale, anrm, n, n, a, lda);
    for (index_t i = 0; i < n; ++i) wr[i] = a[i + i * lda];
    Rlascl<T>('G', cscale, anrm, n - ieval, 1, sub(wi, ieval), std::max<index_t>(n - ieval, 1));
  }
  work[0] = T(gees_lwork(n));
  return ieval;
}

}  // namespace mpkit
