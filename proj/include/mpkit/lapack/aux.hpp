#pragma once

// LAPACK auxiliary routines: rotations, reflectors, 2x2 eigen/singular
// problems, scaling, norms and copies.

#include <algorithm>
#include <cmath>
#include <span>

#include "mpkit/mpblas.hpp"

namespace mpkit {

namespace detail {

template <class T>
std::span<T> sub(std::span<T> s, index_t off) {
  return s.subspan(static_cast<std::size_t>(off));
}

/// Fortran SIGN(a, b): |a| carrying the sign of b (b == -0 counts as +).
template <Real T>
T sign(const T& a, const T& b) {
  const T x = abs(a);
  return b >= T(0) ? x : -x;
}

}  // namespace detail

/// sqrt(x^2 + y^2) without avoidable overflow.
template <Real T>
T Rlapy2(const T& x, const T& y) {
  if (isnan(x)) return x;
  if (isnan(y)) return y;
  const T xa = abs(x);
  const T ya = abs(y);
  const T w = max(xa, ya);
  const T z = min(xa, ya);
  if (z == T(0) || w > Rlamch<T>('O')) return w;
  const T q = z / w;
  return w * sqrt(T(1) + q * q);
}

/// Plane rotation with c*f + s*g = r, -s*f + c*g = 0, c >= 0.
template <Real T>
void Rlartg(const T& f, const T& g, T& c, T& s, T& r) {
  const T safmin = Rlamch<T>('S');
  const T safmax = T(1) / safmin;
  const T rtmin = sqrt(safmin);
  const T rtmax = sqrt(safmax / T(2));
  const T f1 = abs(f);
  const T g1 = abs(g);
  if (g == T(0)) {
    c = T(1);
    s = T(0);
    r = f;
  } else if (f == T(0)) {
    c = T(0);
    s = detail::sign(T(1), g);
    r = g1;
  } else if (f1 > rtmin && f1 < rtmax && g1 > rtmin && g1 < rtmax) {
    const T d = sqrt(f * f + g * g);
    c = f1 / d;
    r = detail::sign(d, f);
    s = g / r;
  } else {
    const T u = min(safmax, max(safmin, max(f1, g1)));
    const T fs = f / u;
    const T gs = g / u;
    const T d = sqrt(fs * fs + gs * gs);
    c = abs(fs) / d;
    r = detail::sign(d, f);
    s = gs / r;
    r = r * u;
  }
}

/// Elementary reflector H = I - tau*v*v' with H*(alpha; x) = (beta; 0).
/// beta has the opposite sign of alpha; v(0) = 1 is implicit, v(1:) overwrites x.
template <Real T>
void Rlarfg(index_t n, T& alpha, std::span<T> x, index_t incx, T& tau) {
  if (n <= 1) {
    tau = T(0);
    return;
  }
  T xnorm = Rnrm2<T>(n - 1, x, incx);
  if (xnorm == T(0)) {
    tau = T(0);
    return;
  }
  T beta = -detail::sign(Rlapy2(alpha, xnorm), alpha);
  const T safmin = Rlamch<T>('S') / Rlamch<T>('E');
  int knt = 0;
  if (abs(beta) < safmin) {
    const T rsafmn = T(1) / safmin;
    do {
      ++knt;
      Rscal<T>(n - 1, rsafmn, x, incx);
      beta *= rsafmn;
      alpha *= rsafmn;
    } while (abs(beta) < safmin && knt < 20);
    xnorm = Rnrm2<T>(n - 1, x, incx);
    beta = -detail::sign(Rlapy2(alpha, xnorm), alpha);
  }
  tau = (beta - alpha) / beta;
  Rscal<T>(n - 1, T(1) / (alpha - beta), x, incx);
  for (int j = 0; j < knt; ++j) beta *= safmin;
  alpha = beta;
}

namespace detail {

/// Last non-zero column of the m x n matrix A (1-based; 0 if none).
template <Real T>
index_t last_nonzero_col(index_t m, index_t n, std::span<const T> a, index_t lda) {
  if (n == 0) return 0;
  if (a[(n - 1) * lda] != T(0) || a[m - 1 + (n - 1) * lda] != T(0)) return n;
  for (index_t j = n; j >= 1; --j)
    for (index_t i = 0; i < m; ++i)
      if (a[i + (j - 1) * lda] != T(0)) return j;
  return 0;
}

/// Last non-zero row of the m x n matrix A (1-based; 0 if none).
template <Real T>
index_t last_nonzero_row(index_t m, index_t n, std::span<const T> a, index_t lda) {
  if (m == 0) return 0;
  if (a[m - 1] != T(0) || a[m - 1 + (n - 1) * lda] != T(0)) return m;
  index_t result = 0;
  for (index_t j = 0; j < n; ++j) {
    index_t i = m;
    while (i >= 1 && a[std::max<index_t>(i, 1) - 1 + j * lda] == T(0)) --i;
    result = std::max(result, i);
  }
  return result;
}

}  // namespace detail

/// C <- H*C (side 'L') or C*H (side 'R') with H = I - tau*v*v'.
template <Real T>
void Rlarf(char side, index_t m, index_t n, std::span<const T> v, index_t incv, const T& tau, std::span<T> c,
           index_t ldc, std::span<T> work) {
  const bool left = lsame(side, 'L');
  index_t lastv = 0;
  index_t lastc = 0;
  if (tau != T(0)) {
    lastv = left ? m : n;
    index_t i = incv > 0 ? (lastv - 1) * incv : 0;
    while (lastv > 0 && v[i] == T(0)) {
      --lastv;
      i -= incv;
    }
    lastc = left ? detail::last_nonzero_col<T>(lastv, n, c, ldc) : detail::last_nonzero_row<T>(m, lastv, c, ldc);
  }
  if (lastv == 0) return;
  if (left) {
    (void)Rgemv<T>('T', lastv, lastc, T(1), c, ldc, v, incv, T(0), work, 1);
    (void)Rger<T>(lastv, lastc, -tau, v, incv, work, 1, c, ldc);
  } else {
    (void)Rgemv<T>('N', lastc, lastv, T(1), c, ldc, v, incv, T(0), work, 1);
    (void)Rger<T>(lastc, lastv, -tau, work, 1, v, incv, c, ldc);
  }
}

/// Sequence of plane rotations, pivot 'V' (adjacent planes) only.
/// side 'L': A <- P*A with A m x n, P = P(z-1)...P(1) for direct 'F'.
template <Real T>
void Rlasr(char side, char direct, index_t m, index_t n, std::span<const T> c, std::span<const T> s,
           std::span<T> a, index_t lda) {
  if (m <= 0 || n <= 0) return;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  const bool forward = lsame(direct, 'F');
  if (lsame(side, 'L')) {
    auto body = [&](index_t j) {
      const T ct = c[j];
      const T st = s[j];
      if (ct != T(1) || st != T(0)) {
        for (index_t i = 0; i < n; ++i) {
          const T temp = A(j + 1, i);
          A(j + 1, i) = ct * temp - st * A(j, i);
          A(j, i) = st * temp + ct * A(j, i);
        }
      }
    };
    if (forward) {
      for (index_t j = 0; j < m - 1; ++j) body(j);
    } else {
      for (index_t j = m - 2; j >= 0; --j) body(j);
    }
  } else {
    auto body = [&](index_t j) {
      const T ct = c[j];
      const T st = s[j];
      if (ct != T(1) || st != T(0)) {
        for (index_t i = 0; i < m; ++i) {
          const T temp = A(i, j + 1);
          A(i, j + 1) = ct * temp - st * A(i, j);
          A(i, j) = st * temp + ct * A(i, j);
        }
      }
    };
    if (forward) {
      for (index_t j = 0; j < n - 1; ++j) body(j);
    } else {
      for (index_t j = n - 2; j >= 0; --j) body(j);
    }
  }
}

namespace detail {

template <Real T>
T lae2_rt(const T& adf, const T& ab) {
  if (adf > ab) {
    const T q = ab / adf;
    return adf * sqrt(T(1) + q * q);
  }
  if (adf < ab) {
    const T q = adf / ab;
    return ab * sqrt(T(1) + q * q);
  }
  return ab * sqrt(T(2));
}

}  // namespace detail

/// Eigenvalues of [[a, b], [b, c]], |rt1| >= |rt2|.
template <Real T>
void Rlae2(const T& a, const T& b, const T& c, T& rt1, T& rt2) {
  const T sm = a + c;
  const T df = a - c;
  const T adf = abs(df);
  const T tb = b + b;
  const T ab = abs(tb);
  const bool a_larger = abs(a) > abs(c);
  const T acmx = a_larger ? a : c;
  const T acmn = a_larger ? c : a;
  const T rt = detail::lae2_rt(adf, ab);
  if (sm < T(0)) {
    rt1 = T(0.5) * (sm - rt);
    rt2 = (acmx / rt1) * acmn - (b / rt1) * b;
  } else if (sm > T(0)) {
    rt1 = T(0.5) * (sm + rt);
    rt2 = (acmx / rt1) * acmn - (b / rt1) * b;
  } else {
    rt1 = T(0.5) * rt;
    rt2 = T(-0.5) * rt;
  }
}

/// Eigen-decomposition of [[a, b], [b, c]]; (cs1, sn1) is the unit
/// eigenvector for rt1.
template <Real T>
void Rlaev2(const T& a, const T& b, const T& c, T& rt1, T& rt2, T& cs1, T& sn1) {
  const T sm = a + c;
  const T df = a - c;
  const T adf = abs(df);
  const T tb = b + b;
  const T ab = abs(tb);
  const bool a_larger = abs(a) > abs(c);
  const T acmx = a_larger ? a : c;
  const T acmn = a_larger ? c : a;
  const T rt = detail::lae2_rt(adf, ab);
  int sgn1 = 0;
  if (sm < T(0)) {
    rt1 = T(0.5) * (sm - rt);
    sgn1 = -1;
    rt2 = (acmx / rt1) * acmn - (b / rt1) * b;
  } else if (sm > T(0)) {
    rt1 = T(0.5) * (sm + rt);
    sgn1 = 1;
    rt2 = (acmx / rt1) * acmn - (b / rt1) * b;
  } else {
    rt1 = T(0.5) * rt;
    rt2 = T(-0.5) * rt;
    sgn1 = 1;
  }
  int sgn2 = 0;
  T cs;
  if (df >= T(0)) {
    cs = df + rt;
    sgn2 = 1;
  } else {
    cs = df - rt;
    sgn2 = -1;
  }
  const T acs = abs(cs);
  if (acs > ab) {
    const T ct = -tb / cs;
    sn1 = T(1) / sqrt(T(1) + ct * ct);
    cs1 = ct * sn1;
  } else if (ab == T(0)) {
    cs1 = T(1);
    sn1 = T(0);
  } else {
    const T tn = -cs / tb;
    cs1 = T(1) / sqrt(T(1) + tn * tn);
    sn1 = tn * cs1;
  }
  if (sgn1 == sgn2) {
    const T tn = cs1;
    cs1 = -sn1;
    sn1 = tn;
  }
}

/// Singular values of the upper triangular [[f, g], [0, h]].
template <Real T>
void Rlas2(const T& f, const T& g, const T& h, T& ssmin, T& ssmax) {
  const T fa = abs(f);
  const T ga = abs(g);
  const T ha = abs(h);
  const T fhmn = min(fa, ha);
  const T fhmx = max(fa, ha);
  if (fhmn == T(0)) {
    ssmin = T(0);
    if (fhmx == T(0)) {
      ssmax = ga;
    } else {
      const T q = min(fhmx, ga) / max(fhmx, ga);
      ssmax = max(fhmx, ga) * sqrt(T(1) + q * q);
    }
    return;
  }
  if (ga < fhmx) {
    const T as = T(1) + fhmn / fhmx;
    const T at = (fhmx - fhmn) / fhmx;
    const T au = (ga / fhmx) * (ga / fhmx);
    const T c = T(2) / (sqrt(as * as + au) + sqrt(at * at + au));
    ssmin = fhmn * c;
    ssmax = fhmx / c;
  } else {
    const T au = fhmx / ga;
    if (au == T(0)) {
      ssmin = (fhmn * fhmx) / ga;
      ssmax = ga;
    } else {
      const T as = T(1) + fhmn / fhmx;
      const T at = (fhmx - fhmn) / fhmx;
      const T c = T(1) / (sqrt(T(1) + (as * au) * (as * au)) + sqrt(T(1) + (at * au) * (at * au)));
      ssmin = (fhmn * c) * au;
      ssmin = ssmin + ssmin;
      ssmax = ga / (c + c);
    }
  }
}

/// SVD of the upper triangular [[f, g], [0, h]]:
/// [csl snl; -snl csl] [f g; 0 h] [csr -snr; snr csr] = [ssmax 0; 0 ssmin].
template <Real T>
void Rlasv2(const T& f, const T& g, const T& h, T& ssmin, T& ssmax, T& snr, T& csr, T& snl, T& csl) {
  T ft = f;
  T fa = abs(ft);
  T ht = h;
  T ha = abs(h);
  int pmax = 1;
  const bool swap = ha > fa;
  if (swap) {
    pmax = 3;
    std::swap(ft, ht);
    std::swap(fa, ha);
  }
  const T gt = g;
  const T ga = abs(gt);
  T clt, crt, slt, srt;
  if (ga == T(0)) {
    ssmin = ha;
    ssmax = fa;
    clt = T(1);
    crt = T(1);
    slt = T(0);
    srt = T(0);
  } else {
    bool gasmal = true;
    if (ga > fa) {
      pmax = 2;
      if (fa / ga < Rlamch<T>('E')) {
        gasmal = false;
        ssmax = ga;
        if (ha > T(1)) {
          ssmin = fa / (ga / ha);
        } else {
          ssmin = (fa / ga) * ha;
        }
        clt = T(1);
        slt = ht / gt;
        srt = T(1);
        crt = ft / gt;
      }
    }
    if (gasmal) {
      const T d = fa - ha;
      T l = d == fa ? T(1) : d / fa;
      const T m = gt / ft;
      T t = T(2) - l;
      const T mm = m * m;
      const T tt = t * t;
      const T s = sqrt(tt + mm);
      const T r = l == T(0) ? abs(m) : sqrt(l * l + mm);
      const T a = T(0.5) * (s + r);
      ssmin = ha / a;
      ssmax = fa * a;
      if (mm == T(0)) {
        if (l == T(0)) {
          t = detail::sign(T(2), ft) * detail::sign(T(1), gt);
        } else {
          t = gt / detail::sign(d, ft) + m / t;
        }
      } else {
        t = (m / (s + t) + m / (r + l)) * (T(1) + a);
      }
      l = sqrt(t * t + T(4));
      crt = T(2) / l;
      srt = t / l;
      clt = (crt + srt * m) / a;
      slt = (ht / ft) * srt / a;
    }
  }
  if (swap) {
    csl = srt;
    snl = crt;
    csr = slt;
    snr = clt;
  } else {
    csl = clt;
    snl = slt;
    csr = crt;
    snr = srt;
  }
  T tsign;
  if (pmax == 1) {
    tsign = detail::sign(T(1), csr) * detail::sign(T(1), csl) * detail::sign(T(1), f);
  } else if (pmax == 2) {
    tsign = detail::sign(T(1), snr) * detail::sign(T(1), csl) * detail::sign(T(1), g);
  } else {
    tsign = detail::sign(T(1), snr) * detail::sign(T(1), snl) * detail::sign(T(1), h);
  }
  ssmax = detail::sign(ssmax, tsign);
  ssmin = detail::sign(ssmin, tsign * detail::sign(T(1), f) * detail::sign(T(1), h));
}

/// Schur factorization of a real 2x2 nonsymmetric matrix in standardized
/// form: on exit either c == 0 (real eigenvalues) or a == d and b*c < 0.
template <Real T>
void Rlanv2(T& a, T& b, T& c, T& d, T& rt1r, T& rt1i, T& rt2r, T& rt2i, T& cs, T& sn) {
  const T multpl(4);
  const T eps = Rlamch<T>('P');
  const T safmin = Rlamch<T>('S');
  const int half_exp = static_cast<int>(std::log2(to_double(safmin / eps)) / 2.0);
  const T safmn2 = ldexp(T(1), half_exp);
  const T safmx2 = T(1) / safmn2;

  if (c == T(0)) {
    cs = T(1);
    sn = T(0);
  } else if (b == T(0)) {
    cs = T(0);
    sn = T(1);
    std::swap(a, d);
    b = -c;
    c = T(0);
  } else if ((a - d) == T(0) && detail::sign(T(1), b) != detail::sign(T(1), c)) {
    cs = T(1);
    sn = T(0);
  } else {
    T temp = a - d;
    T p = T(0.5) * temp;
    const T bcmax = max(abs(b), abs(c));
    const T bcmis = min(abs(b), abs(c)) * detail::sign(T(1), b) * detail::sign(T(1), c);
    T scale = max(abs(p), bcmax);
    T z = (p / scale) * p + (bcmax / scale) * bcmis;
    if (z >= multpl * eps) {
      z = p + detail::sign(sqrt(scale) * sqrt(z), p);
      a = d + z;
      d = d - (bcmax / z) * bcmis;
      const T tau = Rlapy2(c, z);
      cs = z / tau;
      sn = c / tau;
      b = b - c;
      c = T(0);
    } else {
      int count = 0;
      T sigma = b + c;
      for (;;) {
        ++count;
        scale = max(abs(temp), abs(sigma));
        if (scale >= safmx2) {
          sigma *= safmn2;
          temp *= safmn2;
          if (count <= 20) continue;
        }
        if (scale <= safmn2) {
          sigma *= safmx2;
          temp *= safmx2;
          if (count <= 20) continue;
        }
        break;
      }
      p = T(0.5) * temp;
      T tau = Rlapy2(sigma, temp);
      cs = sqrt(T(0.5) * (T(1) + abs(sigma) / tau));
      sn = -(p / (tau * cs)) * detail::sign(T(1), sigma);

      const T aa = a * cs + b * sn;
      const T bb = -a * sn + b * cs;
      const T cc = c * cs + d * sn;
      const T dd = -c * sn + d * cs;
      a = aa * cs + cc * sn;
      b = bb * cs + dd * sn;
      c = -aa * sn + cc * cs;
      d = -bb * sn + dd * cs;

      temp = T(0.5) * (a + d);
      a = temp;
      d = temp;
      if (c != T(0)) {
        if (b != T(0)) {
          if (detail::sign(T(1), b) == detail::sign(T(1), c)) {
            const T sab = sqrt(abs(b));
            const T sac = sqrt(abs(c));
            p = detail::sign(sab * sac, c);
            tau = T(1) / sqrt(abs(b + c));
            a = temp + p;
            d = temp - p;
            b = b - c;
            c = T(0);
            const T cs1 = sab * tau;
            const T sn1 = sac * tau;
            temp = cs * cs1 - sn * sn1;
            sn = cs * sn1 + sn * cs1;
            cs = temp;
          }
        } else {
          b = -c;
          c = T(0);
          temp = cs;
          cs = -sn;
          sn = temp;
        }
      }
    }
  }
  rt1r = a;
  rt2r = d;
  if (c == T(0)) {
    rt1i = T(0);
    rt2i = T(0);
  } else {
    rt1i = sqrt(abs(b)) * sqrt(abs(c));
    rt2i = -rt1i;
  }
}

/// Multiplies the m x n matrix A by cto/cfrom without over/underflow.
/// type 'G' (full), 'U' (upper triangle), 'L' (lower), 'H' (upper Hessenberg).
template <Real T>
void Rlascl(char type, const T& cfrom, const T& cto, index_t m, index_t n, std::span<T> a, index_t lda) {
  if (m == 0 || n == 0) return;
  const T smlnum = Rlamch<T>('S');
  const T bignum = T(1) / smlnum;
  T cfromc = cfrom;
  T ctoc = cto;
  bool done = false;
  while (!done) {
    const T cfrom1 = cfromc * smlnum;
    T mul;
    if (cfrom1 == cfromc) {
      mul = ctoc / cfromc;
      done = true;
    } else {
      const T cto1 = ctoc / bignum;
      if (cto1 == ctoc) {
        mul = ctoc;
        done = true;
        cfromc = T(1);
      } else if (abs(cfrom1) > abs(ctoc) && ctoc != T(0)) {
        mul = smlnum;
        cfromc = cfrom1;
      } else if (abs(cto1) > abs(cfromc)) {
        mul = bignum;
        ctoc = cto1;
      } else {
        mul = ctoc / cfromc;
        done = true;
      }
    }
    for (index_t j = 0; j < n; ++j) {
      index_t lo = 0;
      index_t hi = m;
      if (lsame(type, 'U')) {
        hi = std::min(j + 1, m);
      } else if (lsame(type, 'L')) {
        lo = std::min(j, m);
      } else if (lsame(type, 'H')) {
        hi = std::min(j + 2, m);
      }
      for (index_t i = lo; i < hi; ++i) a[i + j * lda] *= mul;
    }
  }
}

/// Copies all (uplo other than 'U'/'L'), the upper or the lower triangle.
template <Real T>
void Rlacpy(char uplo, index_t m, index_t n, std::span<const T> a, index_t lda, std::span<T> b, index_t ldb) {
  for (index_t j = 0; j < n; ++j) {
    index_t lo = 0;
    index_t hi = m;
    if (lsame(uplo, 'U')) {
      hi = std::min(j + 1, m);
    } else if (lsame(uplo, 'L')) {
      lo = std::min(j, m);
    }
    for (index_t i = lo; i < hi; ++i) b[i + j * ldb] = a[i + j * lda];
  }
}

/// Off-diagonal entries <- alpha, diagonal <- beta (full matrix).
template <Real T>
void Rlaset(index_t m, index_t n, const T& alpha, const T& beta, std::span<T> a, index_t lda) {
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) a[i + j * lda] = i == j ? beta : alpha;
}

/// Matrix norm: 'M' max abs, '1'/'O' one-norm, 'I' infinity norm, 'F' Frobenius.
template <Real T>
T Rlange(char norm, index_t m, index_t n, std::span<const T> a, index_t lda) {
  if (std::min(m, n) == 0) return T(0);
  auto A = [&](index_t i, index_t j) -> const T& { return a[i + j * lda]; };
  T value(0);
  if (lsame(norm, 'M')) {
    for (index_t j = 0; j < n; ++j)
      for (index_t i = 0; i < m; ++i) {
        const T t = abs(A(i, j));
        if (value < t || isnan(t)) value = t;
      }
  } else if (lsame(norm, 'O') || norm == '1') {
    for (index_t j = 0; j < n; ++j) {
      T sum(0);
      for (index_t i = 0; i < m; ++i) sum += abs(A(i, j));
      if (value < sum || isnan(sum)) value = sum;
    }
  } else if (lsame(norm, 'I')) {
    for (index_t i = 0; i < m; ++i) {
      T sum(0);
      for (index_t j = 0; j < n; ++j) sum += abs(A(i, j));
      if (value < sum || isnan(sum)) value = sum;
    }
  } else if (lsame(norm, 'F') || lsame(norm, 'E')) {
    T scale(0);
    T ssq(1);
    for (index_t j = 0; j < n; ++j)
      for (index_t i = 0; i < m; ++i) {
        if (A(i, j) != T(0)) {
          const T t = abs(A(i, j));
          if (scale < t) {
            const T r = scale / t;
            ssq = T(1) + ssq * r * r;
            scale = t;
          } else {
            const T r = t / scale;
            ssq += r * r;
          }
        }
      }
    value = scale * sqrt(ssq);
  }
  return value;
}

/// Max-abs norm of a symmetric matrix stored in the uplo triangle.
template <Real T>
T Rlansy_max(char uplo, index_t n, std::span<const T> a, index_t lda) {
  T value(0);
  const bool upper = lsame(uplo, 'U');
  for (index_t j = 0; j < n; ++j) {
    const index_t lo = upper ? 0 : j;
    const index_t hi = upper ? j + 1 : n;
    for (index_t i = lo; i < hi; ++i) {
      const T t = abs(a[i + j * lda]);
      if (value < t || isnan(t)) value = t;
    }
  }
  return value;
}

/// Max-abs norm of the symmetric tridiagonal matrix (d, e).
template <Real T>
T Rlanst_max(index_t n, std::span<const T> d, std::span<const T> e) {
  T value(0);
  for (index_t i = 0; i < n; ++i) {
    const T t = abs(d[i]);
    if (value < t || isnan(t)) value = t;
  }
  for (index_t i = 0; i + 1 < n; ++i) {
    const T t = abs(e[i]);
    if (value < t || isnan(t)) value = t;
  }
  return value;
}

/// Row interchanges rows k1..k2 (1-based) per ipiv; incx = 1 forward, -1 reverse.
template <Real T>
void Rlaswp(index_t n, std::span<T> a, index_t lda, index_t k1, index_t k2, std::span<const index_t> ipiv,
            index_t incx) {
  auto swap_rows = [&](index_t i) {
    const index_t ip = ipiv[i - 1];
    if (ip != i) {
      for (index_t j = 0; j < n; ++j) std::swap(a[(i - 1) + j * lda], a[(ip - 1) + j * lda]);
    }
  };
  if (incx > 0) {
    for (index_t i = k1; i <= k2; ++i) swap_rows(i);
  } else if (incx < 0) {
    for (index_t i = k2; i >= k1; --i) swap_rows(i);
  }
}

/// Generates the m x n matrix Q with orthonormal columns, the first n
/// columns of H(1)...H(k) as returned by a QR factorization.
template <Real T>
void Rorg2r(index_t m, index_t n, index_t k, std::span<T> a, index_t lda, std::span<const T> tau,
            std::span<T> work) {
  if (n <= 0) return;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  for (index_t j = k; j < n; ++j) {
    for (index_t l = 0; l < m; ++l) A(l, j) = T(0);
    A(j, j) = T(1);
  }
  for (index_t i = k - 1; i >= 0; --i) {
    if (i < n - 1) {
      A(i, i) = T(1);
      Rlarf<T>('L', m - i, n - i - 1, detail::sub(a, i + i * lda), 1, tau[i], detail::sub(a, i + (i + 1) * lda),
               lda, work);
    }
    if (i < m - 1) Rscal<T>(m - i - 1, -tau[i], detail::sub(a, i + 1 + i * lda), 1);
    A(i, i) = T(1) - tau[i];
    for (index_t l = 0; l < i; ++l) A(l, i) = T(0);
  }
}

/// Generates Q = H(k)...H(1), the last n columns of a product of k
/// reflectors as returned by a QL factorization.
template <Real T>
void Rorg2l(index_t m, index_t n, index_t k, std::span<T> a, index_t lda, std::span<const T> tau,
            std::span<T> work) {
  if (n <= 0) return;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  for (index_t j = 0; j < n - k; ++j) {
    for (index_t l = 0; l < m; ++l) A(l, j) = T(0);
    A(m - n + j, j) = T(1);
  }
  for (index_t i = 0; i < k; ++i) {
    const index_t ii = n - k + i;
    A(m - n + ii, ii) = T(1);
    Rlarf<T>('L', m - n + ii + 1, ii, detail::sub(a, ii * lda), 1, tau[i], a, lda, work);
    Rscal<T>(m - n + ii, -tau[i], detail::sub(a, ii * lda), 1);
    A(m - n + ii, ii) = T(1) - tau[i];
    for (index_t l = m - n + ii + 1; l < m; ++l) A(l, ii) = T(0);
  }
}

/// Generates the m x n matrix Q with orthonormal rows, the first m rows of
/// H(k)...H(1) as returned by an LQ factorization.
template <Real T>
void Rorgl2(index_t m, index_t n, index_t k, std::span<T> a, index_t lda, std::span<const T> tau,
            std::span<T> work) {
  if (m <= 0) return;
  auto A = [&](index_t i, index_t j) -> T& { return a[i + j * lda]; };
  if (k < m) {
    for (index_t j = 0; j < n; ++j) {
      for (index_t l = k; l < m; ++l) A(l, j) = T(0);
      if (j >= k && j < m) A(j, j) = T(1);
    }
  }
  for (index_t i = k - 1; i >= 0; --i) {
    if (i < n - 1) {
      if (i < m - 1) {
        A(i, i) = T(1);
        Rlarf<T>('R', m - i - 1, n - i, detail::sub(a, i + i * lda), lda, tau[i], detail::sub(a, i + 1 + i * lda),
                 lda, work);
      }
      Rscal<T>(n - i - 1, -tau[i], detail::sub(a, i + (i + 1) * lda), lda);
    }
    A(i, i) = T(1) - tau[i];
    for (index_t l = 0; l < i; ++l) A(i, l) = T(0);
  }
}

}  // namespace mpkit
