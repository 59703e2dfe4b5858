#pragma once

// Singular value decomposition: bidiagonal reduction followed by implicit
// zero-shift/shifted QR on the bidiagonal.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "mpkit/lapack/aux.hpp"

namespace mpkit {

/// Reduces the m x n matrix A (m >= n) to upper bidiagonal form
/// Q'*A*P = B (unblocked). work needs max(m, n) entries.
template <Real T>
index_t Rgebrd(index_t m, index_t n, std::span<T> a, index_t lda, std::span<T> d, std::span<T> e,
               std::span<T> tauq, std::span<T> taup, std::span<T> work) {
  if (m < 0) return -1;
  if (n < 0 || n > m) return -2;
  if (lda < std::max<index_t>(1, m)) return -4;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  using detail::sub;
  for (index_t i = 0; i < n; ++i) {
    Rlarfg<T>(m - i, A(i, i), sub(a, std::min(i + 1, m - 1) + i * lda), 1, tauq[i]);
    d[i] = A(i, i);
    A(i, i) = T(1);
    if (i < n - 1) {
      Rlarf<T>('L', m - i, n - i - 1, sub(a, i + i * lda), 1, tauq[i], sub(a, i + (i + 1) * lda), lda, work);
    }
    A(i, i) = d[i];
    if (i < n - 1) {
      Rlarfg<T>(n - i - 1, A(i, i + 1), sub(a, i + std::min(i + 2, n - 1) * lda), lda, taup[i]);
      e[i] = A(i, i + 1);
      A(i, i + 1) = T(1);
      Rlarf<T>('R', m - i - 1, n - i - 1, sub(a, i + (i + 1) * lda), lda, taup[i],
               sub(a, i + 1 + (i + 1) * lda), lda, work);
      A(i, i + 1) = e[i];
    } else {
      taup[i] = T(0);
    }
  }
  return 0;
}

/// Singular values (and optionally vectors) of the n x n upper bidiagonal
/// matrix (d, e): B = Q*S*P'. Rows of the ncvt-column VT are premultiplied
/// by P', the nru-row U is postmultiplied by Q. work needs 4(n-1)
/// entries. On success d holds the singular values in decreasing order.
/// Returns the count of nonzero off-diagonals if 6n^2 passes are exhausted.
template <Real T>
index_t Rbdsqr(index_t n, index_t ncvt, index_t nru, std::span<T> d, std::span<T> e, std::span<T> vt, index_t ldvt,
               std::span<T> u, index_t ldu, std::span<T> work) {
  if (n < 0) return -2;
  if (ncvt < 0) return -3;
  if (nru < 0) return -4;
  if (ldvt < 1 || (ncvt > 0 && ldvt < std::max<index_t>(1, n))) return -9;
  if (ldu < std::max<index_t>(1, nru)) return -11;
  if (n == 0) return 0;
  using detail::sub;
  using detail::sign;

  // 1-based views.
  auto D = [&](index_t i) -> T& { return d[i - 1]; };
  auto E = [&](index_t i) -> T& { return e[i - 1]; };
  auto W = [&](index_t i) -> T& { return work[i - 1]; };
  auto vt_row = [&](index_t i) { return sub(vt, i - 1); };
  auto u_col = [&](index_t j) { return sub(u, (j - 1) * ldu); };

  constexpr index_t maxitr = 6;
  const T hndrth(0.01);
  const T eps = Rlamch<T>('E');
  const T unfl = Rlamch<T>('S');

  if (n > 1) {
    const index_t nm1 = n - 1;
    const index_t nm12 = nm1 + nm1;
    const index_t nm13 = nm12 + nm1;
    index_t idir = 0;

    const T tolmul = max(T(10), min(T(100), T(std::pow(to_double(eps), -0.125))));
    const T tol = tolmul * eps;

    T smax(0);
    for (index_t i = 1; i <= n; ++i) smax = max(smax, abs(D(i)));
    for (index_t i = 1; i <= n - 1; ++i) smax = max(smax, abs(E(i)));

    T sminoa = abs(D(1));
    if (sminoa != T(0)) {
      T mu = sminoa;
      for (index_t i = 2; i <= n; ++i) {
        mu = abs(D(i)) * (mu / (mu + abs(E(i - 1))));
        sminoa = min(sminoa, mu);
        if (sminoa == T(0)) break;
      }
    }
    sminoa = sminoa / sqrt(T(n));
    const T thresh = max(tol * sminoa, T(maxitr) * (T(n) * (T(n) * unfl)));

    const index_t maxit = maxitr * n * n;
    index_t iter = 0;
    index_t oldll = -1;
    index_t oldm = -1;
    index_t m = n;

    while (m > 1) {
      if (iter > maxit) {
        index_t info = 0;
        for (index_t i = 1; i <= n - 1; ++i)
          if (E(i) != T(0)) ++info;
        return info;
      }

      // Find the diagonal block to work on.
      smax = abs(D(m));
      index_t ll = 0;
      bool split = false;
      for (index_t lll = 1; lll <= m - 1; ++lll) {
        ll = m - lll;
        const T abss = abs(D(ll));
        const T abse = abs(E(ll));
        if (abse <= thresh) {
          split = true;
          break;
        }
        smax = max(smax, max(abss, abse));
      }
      if (split) {
        E(ll) = T(0);
        if (ll == m - 1) {
          --m;
          continue;
        }
      } else {
        ll = 0;
      }
      ++ll;
      // E(ll)..E(m-1) are nonzero, E(ll-1) is zero.

      if (ll == m - 1) {
        T sigmn, sigmx, sinr, cosr, sinl, cosl;
        Rlasv2(D(m - 1), E(m - 1), D(m), sigmn, sigmx, sinr, cosr, sinl, cosl);
        D(m - 1) = sigmx;
        E(m - 1) = T(0);
        D(m) = sigmn;
        if (ncvt > 0) Rrot<T>(ncvt, vt_row(m - 1), ldvt, vt_row(m), ldvt, cosr, sinr);
        if (nru > 0) Rrot<T>(nru, u_col(m - 1), 1, u_col(m), 1, cosl, sinl);
        m -= 2;
        continue;
      }

      // Chase the bulge from the larger end towards the smaller one.
      if (ll > oldm || m < oldll) {
        idir = abs(D(ll)) >= abs(D(m)) ? 1 : 2;
      }

      // Convergence tests.
      T sminl(0);
      bool deflated = false;
      if (idir == 1) {
        if (abs(E(m - 1)) <= abs(tol) * abs(D(m))) {
          E(m - 1) = T(0);
          continue;
        }
        T mu = abs(D(ll));
        sminl = mu;
        for (index_t lll = ll; lll <= m - 1; ++lll) {
          if (abs(E(lll)) <= tol * mu) {
            E(lll) = T(0);
            deflated = true;
            break;
          }
          mu = abs(D(lll + 1)) * (mu / (mu + abs(E(lll))));
          sminl = min(sminl, mu);
        }
      } else {
        if (abs(E(ll)) <= abs(tol) * abs(D(ll))) {
          E(ll) = T(0);
          continue;
        }
        T mu = abs(D(m));
        sminl = mu;
        for (index_t lll = m - 1; lll >= ll; --lll) {
          if (abs(E(lll)) <= tol * mu) {
            E(lll) = T(0);
            deflated = true;
            break;
          }
          mu = abs(D(lll)) * (mu / (mu + abs(E(lll))));
          sminl = min(sminl, mu);
        }
      }
      if (deflated) continue;
      oldll = ll;
      oldm = m;

      // Shift: zero if it would ruin relative accuracy.
      T shift(0);
      if (!(T(n) * tol * (sminl / smax) <= max(eps, hndrth * tol))) {
        T sll, r;
        if (idir == 1) {
          sll = abs(D(ll));
          Rlas2(D(m - 1), E(m - 1), D(m), shift, r);
        } else {
          sll = abs(D(m));
          Rlas2(D(ll), E(ll), D(ll + 1), shift, r);
        }
        if (sll > T(0)) {
          const T q = shift / sll;
          if (q * q < eps) shift = T(0);
        }
      }

      iter += m - ll;

      if (shift == T(0)) {
        if (idir == 1) {
          T cs(1), sn, r, oldcs(1), oldsn(0);
          for (index_t i = ll; i <= m - 1; ++i) {
            Rlartg(D(i) * cs, E(i), cs, sn, r);
            if (i > ll) E(i - 1) = oldsn * r;
            Rlartg(oldcs * r, D(i + 1) * sn, oldcs, oldsn, D(i));
            W(i - ll + 1) = cs;
            W(i - ll + 1 + nm1) = sn;
            W(i - ll + 1 + nm12) = oldcs;
            W(i - ll + 1 + nm13) = oldsn;
          }
          const T h = D(m) * cs;
          D(m) = h * oldcs;
          E(m - 1) = h * oldsn;
          if (ncvt > 0) Rlasr<T>('L', 'F', m - ll + 1, ncvt, sub(work, 0), sub(work, n - 1), vt_row(ll), ldvt);
          if (nru > 0) Rlasr<T>('R', 'F', nru, m - ll + 1, sub(work, nm12), sub(work, nm13), u_col(ll), ldu);
          if (abs(E(m - 1)) <= thresh) E(m - 1) = T(0);
        } else {
          T cs(1), sn, r, oldcs(1), oldsn(0);
          for (index_t i = m; i >= ll + 1; --i) {
            Rlartg(D(i) * cs, E(i - 1), cs, sn, r);
            if (i < m) E(i) = oldsn * r;
            Rlartg(oldcs * r, D(i - 1) * sn, oldcs, oldsn, D(i));
            W(i - ll) = cs;
            W(i - ll + nm1) = -sn;
            W(i - ll + nm12) = oldcs;
            W(i - ll + nm13) = -oldsn;
          }
          const T h = D(ll) * cs;
          D(ll) = h * oldcs;
          E(ll) = h * oldsn;
          if (ncvt > 0) Rlasr<T>('L', 'B', m - ll + 1, ncvt, sub(work, nm12), sub(work, nm13), vt_row(ll), ldvt);
          if (nru > 0) Rlasr<T>('R', 'B', nru, m - ll + 1, sub(work, 0), sub(work, n - 1), u_col(ll), ldu);
          if (abs(E(ll)) <= thresh) E(ll) = T(0);
        }
      } else {
        if (idir == 1) {
          T f = (abs(D(ll)) - shift) * (sign(T(1), D(ll)) + shift / D(ll));
          T g = E(ll);
          T cosr, sinr, cosl, sinl, r;
          for (index_t i = ll; i <= m - 1; ++i) {
            Rlartg(f, g, cosr, sinr, r);
            if (i > ll) E(i - 1) = r;
            f = cosr * D(i) + sinr * E(i);
            E(i) = cosr * E(i) - sinr * D(i);
            g = sinr * D(i + 1);
            D(i + 1) = cosr * D(i + 1);
            Rlartg(f, g, cosl, sinl, r);
            D(i) = r;
            f = cosl * E(i) + sinl * D(i + 1);
            D(i + 1) = cosl * D(i + 1) - sinl * E(i);
            if (i < m - 1) {
              g = sinl * E(i + 1);
              E(i + 1) = cosl * E(i + 1);
            }
            W(i - ll + 1) = cosr;
            W(i - ll + 1 + nm1) = sinr;
            W(i - ll + 1 + nm12) = cosl;
            W(i - ll + 1 + nm13) = sinl;
          }
          E(m - 1) = f;
          if (ncvt > 0) Rlasr<T>('L', 'F', m - ll + 1, ncvt, sub(work, 0), sub(work, n - 1), vt_row(ll), ldvt);
          if (nru > 0) Rlasr<T>('R', 'F', nru, m - ll + 1, sub(work, nm12), sub(work, nm13), u_col(ll), ldu);
          if (abs(E(m - 1)) <= thresh) E(m - 1) = T(0);
        } else {
          T f = (abs(D(m)) - shift) * (sign(T(1), D(m)) + shift / D(m));
          T g = E(m - 1);
          T cosr, sinr, cosl, sinl, r;
          for (index_t i = m; i >= ll + 1; --i) {
            Rlartg(f, g, cosr, sinr, r);
            if (i < m) E(i) = r;
            f = cosr * D(i) + sinr * E(i - 1);
            E(i - 1) = cosr * E(i - 1) - sinr * D(i);
            g = sinr * D(i - 1);
            D(i - 1) = cosr * D(i - 1);
            Rlartg(f, g, cosl, sinl, r);
            D(i) = r;
            f = cosl * E(i - 1) + sinl * D(i - 1);
            D(i - 1) = cosl * D(i - 1) - sinl * E(i - 1);
            if (i > ll + 1) {
              g = sinl * E(i - 2);
              E(i - 2) = cosl * E(i - 2);
            }
            W(i - ll) = cosr;
            W(i - ll + nm1) = -sinr;
            W(i - ll + nm12) = cosl;
            W(i - ll + nm13) = -sinl;
          }
          E(ll) = f;
          if (abs(E(ll)) <= thresh) E(ll) = T(0);
          if (ncvt > 0) Rlasr<T>('L', 'B', m - ll + 1, ncvt, sub(work, nm12), sub(work, nm13), vt_row(ll), ldvt);
          if (nru > 0) Rlasr<T>('R', 'B', nru, m - ll + 1, sub(work, 0), sub(work, n - 1), u_col(ll), ldu);
        }
      }
    }
  }

  // Make singular values positive, then sort decreasing.
  for (index_t i = 1; i <= n; ++i) {
    if (D(i) < T(0)) {
      D(i) = -D(i);
      if (ncvt > 0) Rscal<T>(ncvt, T(-1), vt_row(i), ldvt);
    }
  }
  for (index_t i = 1; i <= n - 1; ++i) {
    index_t isub = 1;
    T smin = D(1);
    for (index_t j = 2; j <= n + 1 - i; ++j) {
      if (D(j) <= smin) {
        isub = j;
        smin = D(j);
      }
    }
    if (isub != n + 1 - i) {
      D(isub) = D(n + 1 - i);
      D(n + 1 - i) = smin;
      if (ncvt > 0) Rswap<T>(ncvt, vt_row(isub), ldvt, vt_row(n + 1 - i), ldvt);
      if (nru > 0) Rswap<T>(nru, u_col(isub), 1, u_col(n + 1 - i), 1);
    }
  }
  return 0;
}

/// Minimum lwork of Rgesvd.
inline index_t gesvd_lwork(index_t m, index_t n) {
  const index_t mn = std::min(m, n);
  const index_t mx = std::max(m, n);
  index_t lw = 3 * mn + std::max(mx, 4 * mn);
  if (m < n) lw += m * n;
  return std::max<index_t>(1, lw);
}

namespace detail {

/// A = U*S*VT for m >= n; jobu/jobvt are 'A' or 'N'. A is destroyed.
template <Real T>
index_t gesvd_tall(bool wantu, bool wantvt, index_t m, index_t n, std::span<T> a, index_t lda, std::span<T> s,
                   std::span<T> u, index_t ldu, std::span<T> vt, index_t ldvt, std::span<T> work) {
  auto e = work.subspan(0, static_cast<std::size_t>(n));
  auto tauq = sub(work, n).subspan(0, static_cast<std::size_t>(n));
  auto taup = sub(work, 2 * n).subspan(0, static_cast<std::size_t>(n));
  auto rest = sub(work, 3 * n);
  (void)Rgebrd<T>(m, n, a, lda, s, e, tauq, taup, rest);
  if (wantu) {
    Rlacpy<T>('L', m, n, a, lda, u, ldu);
    Rorg2r<T>(m, m, n, u, ldu, tauq, rest);
  }
  if (wantvt) {
    Rlacpy<T>('U', n, n, a, lda, vt, ldvt);
    // Shift the reflectors one row down; first row and column of P' are e1.
    auto VT = [&](index_t i, index_t j) -> T& { return vt[i + j * ldvt]; };
    VT(0, 0) = T(1);
    for (index_t i = 1; i < n; ++i) VT(i, 0) = T(0);
    for (index_t j = 1; j < n; ++j) {
      for (index_t i = j - 1; i >= 1; --i) VT(i, j) = VT(i - 1, j);
      VT(0, j) = T(0);
    }
    if (n > 1) Rorgl2<T>(n - 1, n - 1, n - 1, sub(vt, 1 + ldvt), ldvt, taup, rest);
  }
  return Rbdsqr<T>(n, wantvt ? n : 0, wantu ? m : 0, s, e, vt, ldvt, u, ldu, rest);
}

template <class T>
void transpose_square(index_t n, std::span<T> a, index_t lda) {
  for (index_t j = 0; j < n; ++j)
    for (index_t i = j + 1; i < n; ++i) std::swap(a[i + j * lda], a[j + i * lda]);
}

}  // namespace detail

/// Singular values s (decreasing) and optionally all left (jobu 'A') and
/// right (jobvt 'A') singular vectors: A = U*diag(s)*VT. jobu/jobvt 'N'
/// skips them. A is destroyed. lwork == -1 queries the size.
template <Real T>
index_t Rgesvd(char jobu, char jobvt, index_t m, index_t n, std::span<T> a, index_t lda, std::span<T> s,
               std::span<T> u, index_t ldu, std::span<T> vt, index_t ldvt, std::span<T> work, index_t lwork) {
  const bool wantu = lsame(jobu, 'A');
  const bool wantvt = lsame(jobvt, 'A');
  const bool lquery = lwork == -1;
  if (!wantu && !lsame(jobu, 'N')) return -1;
  if (!wantvt && !lsame(jobvt, 'N')) return -2;
  if (m < 0) return -3;
  if (n < 0) return -4;
  if (lda < std::max<index_t>(1, m)) return -6;
  if (ldu < 1 || (wantu && ldu < m)) return -9;
  if (ldvt < 1 || (wantvt && ldvt < n)) return -11;
  const index_t minwrk = gesvd_lwork(m, n);
  if (lwork < minwrk && !lquery) return -13;
  if (!work.empty()) work[0] = T(minwrk);
  if (lquery) return 0;
  if (m == 0 || n == 0) {
    if (wantu) Rlaset<T>(m, m, T(0), T(1), u, ldu);
    if (wantvt) Rlaset<T>(n, n, T(0), T(1), vt, ldvt);
    return 0;
  }

  const T eps = Rlamch<T>('P');
  const T smlnum = sqrt(Rlamch<T>('S')) / eps;
  const T bignum = T(1) / smlnum;
  const T anrm = Rlange<T>('M', m, n, a, lda);
  bool scaled = false;
  if (anrm > T(0) && anrm < smlnum) {
    scaled = true;
    Rlascl<T>('G', anrm, smlnum, m, n, a, lda);
  } else if (anrm > bignum) {
    scaled = true;
    Rlascl<T>('G', anrm, bignum, m, n, a, lda);
  }

  index_t info = 0;
  if (m >= n) {
    info = detail::gesvd_tall<T>(wantu, wantvt, m, n, a, lda, s, u, ldu, vt, ldvt, work);
  } else {
    // A' = U1*S*V1' gives A = V1*S*U1': factor the transpose, with V1' in u
    // and U1 in vt, then transpose both in place.
    auto at = detail::sub(work, minwrk - m * n);
    for (index_t j = 0; j < n; ++j)
      for (index_t i = 0; i < m; ++i) at[j + i * n] = a[i + j * lda];
    info = detail::gesvd_tall<T>(wantvt, wantu, n, m, at, n, s, vt, ldvt, u, ldu, work);
    if (wantu) detail::transpose_square<T>(m, u, ldu);
    if (wantvt) detail::transpose_square<T>(n, vt, ldvt);
  }

  if (scaled) {
    const index_t mn = std::min(m, n);
    Rlascl<T>('G', anrm > bignum ? bignum : smlnum, anrm, mn, 1, s, mn);
  }
  work[0] = T(minwrk);
  return info;
}

}  // namespace mpkit
