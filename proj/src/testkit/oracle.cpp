// dd kernels against a naive binary64 reference written from the
// mathematical definitions (no shared code with mpblas).

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>

#include "mpkit/testkit.hpp"

namespace mpkit::testkit {

namespace {

constexpr double kEps64 = 0x1p-53;

using Vec = std::vector<double>;

struct Mat {
  index_t m = 0;
  index_t n = 0;
  Vec a;
  double& operator()(index_t i, index_t j) { return a[static_cast<std::size_t>(i + j * m)]; }
  double operator()(index_t i, index_t j) const { return a[static_cast<std::size_t>(i + j * m)]; }
};

Mat random_mat(Rng& rng, index_t m, index_t n) {
  Mat x{m, n, Vec(static_cast<std::size_t>(std::max<index_t>(1, m * n)))};
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) x(i, j) = rng.uniform();
  return x;
}

Vec random_vec(Rng& rng, index_t n) {
  Vec v(static_cast<std::size_t>(std::max<index_t>(1, n)));
  for (index_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = rng.uniform();
  return v;
}

/// Well-conditioned triangular factor: random off-diagonal, diagonal n + 1.
Mat triangular(Rng& rng, index_t n, bool upper) {
  Mat t = random_mat(rng, n, n);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) {
      if (i == j) t(i, j) = static_cast<double>(n + 1);
      if (upper ? i > j : i < j) t(i, j) = 0.0;
    }
  return t;
}

double op(const Mat& a, bool trans, index_t i, index_t j) { return trans ? a(j, i) : a(i, j); }

std::vector<dd_real> to_dd(const Vec& v) { return {v.begin(), v.end()}; }

/// One comparison: dd outputs, naive outputs, scales (|.| evaluation), inner
/// dimension, and the two generic-kernel statuses.
struct Outcome {
  Vec dd;
  Vec ref;
  Vec scale;
  index_t k = 1;
  BlasStatus f64_status;
  BlasStatus dd_status;
  bool normwise = false;
};

double outcome_ratio(const Outcome& o) {
  double worst = 0.0;
  double norm_scale = 0.0;
  if (o.normwise)
    for (double s : o.scale) norm_scale = std::max(norm_scale, s);
  for (std::size_t i = 0; i < o.ref.size(); ++i) {
    const double diff = std::fabs(o.dd[i] - o.ref[i]);
    const double s = o.normwise ? norm_scale : o.scale[i];
    const double denom = static_cast<double>(std::max<index_t>(1, o.k)) * kEps64 * s;
    if (diff == 0.0) continue;
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, diff / denom);
  }
  return worst;
}

Vec round_all(const std::vector<dd_real>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

template <class T>
std::vector<T> cast(const Vec& v) {
  return {v.begin(), v.end()};
}

char pick(std::uint64_t seed, int bit, char a, char b) { return ((seed >> bit) & 1U) ? b : a; }

Outcome run_axpy(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const double alpha = rng.uniform();
  const Vec x = random_vec(rng, n);
  const Vec y = random_vec(rng, n);
  Outcome o;
  auto yd = to_dd(y);
  Raxpy<dd_real>(n, dd_real(alpha), to_dd(x), 1, yd, 1);
  o.dd = round_all(yd);
  o.ref = y;
  o.scale = Vec(y.size());
  for (index_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    o.ref[u] = y[u] + alpha * x[u];
    o.scale[u] = std::fabs(y[u]) + std::fabs(alpha * x[u]);
  }
  o.k = 1;
  return o;
}

Outcome run_scal(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const double alpha = rng.uniform();
  const Vec x = random_vec(rng, n);
  Outcome o;
  auto xd = to_dd(x);
  Rscal<dd_real>(n, dd_real(alpha), xd, 1);
  o.dd = round_all(xd);
  o.ref = x;
  o.scale = Vec(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    o.ref[i] = alpha * x[i];
    o.scale[i] = std::fabs(o.ref[i]);
  }
  return o;
}

Outcome run_dot(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const Vec x = random_vec(rng, n);
  const Vec y = random_vec(rng, n);
  Outcome o;
  o.dd = {to_double(Rdot<dd_real>(n, to_dd(x), 1, to_dd(y), 1))};
  double sum = 0.0;
  double abs_sum = 0.0;
  for (index_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    sum += x[u] * y[u];
    abs_sum += std::fabs(x[u] * y[u]);
  }
  o.ref = {sum};
  o.scale = {abs_sum};
  o.k = n;
  return o;
}

Outcome run_nrm2(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const Vec x = random_vec(rng, n);
  Outcome o;
  o.dd = {to_double(Rnrm2<dd_real>(n, to_dd(x), 1))};
  double ss = 0.0;
  for (index_t i = 0; i < n; ++i) ss += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  o.ref = {std::sqrt(ss)};
  o.scale = o.ref;
  o.k = n + 1;
  return o;
}

Outcome run_asum(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const Vec x = random_vec(rng, n);
  Outcome o;
  o.dd = {to_double(Rasum<dd_real>(n, to_dd(x), 1))};
  double sum = 0.0;
  for (index_t i = 0; i < n; ++i) sum += std::fabs(x[static_cast<std::size_t>(i)]);
  o.ref = {sum};
  o.scale = o.ref;
  o.k = n;
  return o;
}

Outcome run_gemv(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t m = s.m;
  const index_t n = s.n;
  const char trans = pick(s.seed, 0, 'N', 'T');
  const bool t = trans == 'T';
  const index_t leny = t ? n : m;
  const index_t lenx = t ? m : n;
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  const Mat a = random_mat(rng, m, n);
  const Vec x = random_vec(rng, lenx);
  const Vec y = random_vec(rng, leny);
  Outcome o;
  auto yd = to_dd(y);
  const auto lda = std::max<index_t>(1, m);
  o.dd_status = Rgemv<dd_real>(trans, m, n, dd_real(alpha), to_dd(a.a), lda, to_dd(x), 1, dd_real(beta), yd, 1);
  auto yf = y;
  o.f64_status = Rgemv<double>(trans, m, n, alpha, a.a, lda, x, 1, beta, yf, 1);
  o.dd = round_all(yd);
  o.dd.resize(static_cast<std::size_t>(leny));
  o.ref.assign(static_cast<std::size_t>(leny), 0.0);
  o.scale.assign(static_cast<std::size_t>(leny), 0.0);
  for (index_t i = 0; i < leny; ++i) {
    double sum = 0.0;
    double abs_sum = 0.0;
    for (index_t l = 0; l < lenx; ++l) {
      const double p = op(a, t, i, l) * x[static_cast<std::size_t>(l)];
      sum += p;
      abs_sum += std::fabs(p);
    }
    const auto u = static_cast<std::size_t>(i);
    o.ref[u] = alpha * sum + beta * y[u];
    o.scale[u] = std::fabs(alpha) * abs_sum + std::fabs(beta * y[u]);
  }
  o.k = lenx + 2;
  return o;
}

Outcome run_ger(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t m = s.m;
  const index_t n = s.n;
  const double alpha = rng.uniform();
  const Mat a = random_mat(rng, m, n);
  const Vec x = random_vec(rng, m);
  const Vec y = random_vec(rng, n);
  Outcome o;
  auto ad = to_dd(a.a);
  const auto lda = std::max<index_t>(1, m);
  o.dd_status = Rger<dd_real>(m, n, dd_real(alpha), to_dd(x), 1, to_dd(y), 1, ad, lda);
  auto af = a.a;
  o.f64_status = Rger<double>(m, n, alpha, x, 1, y, 1, af, lda);
  o.dd = round_all(ad);
  o.ref = a.a;
  o.scale.assign(a.a.size(), 0.0);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) {
      const auto u = static_cast<std::size_t>(i + j * m);
      const double p = alpha * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      o.ref[u] = a.a[u] + p;
      o.scale[u] = std::fabs(a.a[u]) + std::fabs(p);
    }
  o.k = 2;
  return o;
}

Outcome run_symv(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const char uplo = pick(s.seed, 0, 'U', 'L');
  const bool upper = uplo == 'U';
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  Mat a = random_mat(rng, n, n);
  const Vec x = random_vec(rng, n);
  const Vec y = random_vec(rng, n);
  auto sym = [&](index_t i, index_t j) {
    const bool stored = upper ? i <= j : i >= j;
    return stored ? a(i, j) : a(j, i);
  };
  Outcome o;
  auto yd = to_dd(y);
  const auto lda = std::max<index_t>(1, n);
  o.dd_status = Rsymv<dd_real>(uplo, n, dd_real(alpha), to_dd(a.a), lda, to_dd(x), 1, dd_real(beta), yd, 1);
  auto yf = y;
  o.f64_status = Rsymv<double>(uplo, n, alpha, a.a, lda, x, 1, beta, yf, 1);
  o.dd = round_all(yd);
  o.ref.assign(y.size(), 0.0);
  o.scale.assign(y.size(), 0.0);
  for (index_t i = 0; i < n; ++i) {
    double sum = 0.0;
    double abs_sum = 0.0;
    for (index_t l = 0; l < n; ++l) {
      const double p = sym(i, l) * x[static_cast<std::size_t>(l)];
      sum += p;
      abs_sum += std::fabs(p);
    }
    const auto u = static_cast<std::size_t>(i);
    o.ref[u] = alpha * sum + beta * y[u];
    o.scale[u] = std::fabs(alpha) * abs_sum + std::fabs(beta * y[u]);
  }
  o.k = n + 2;
  return o;
}

Outcome run_syr2(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const char uplo = pick(s.seed, 0, 'U', 'L');
  const bool upper = uplo == 'U';
  const double alpha = rng.uniform();
  const Mat a = random_mat(rng, n, n);
  const Vec x = random_vec(rng, n);
  const Vec y = random_vec(rng, n);
  Outcome o;
  auto ad = to_dd(a.a);
  const auto lda = std::max<index_t>(1, n);
  o.dd_status = Rsyr2<dd_real>(uplo, n, dd_real(alpha), to_dd(x), 1, to_dd(y), 1, ad, lda);
  auto af = a.a;
  o.f64_status = Rsyr2<double>(uplo, n, alpha, x, 1, y, 1, af, lda);
  o.dd = round_all(ad);
  o.ref = a.a;
  o.scale.assign(a.a.size(), 0.0);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i + j * n);
      if (upper ? i > j : i < j) {
        o.scale[u] = std::fabs(a.a[u]);
        continue;
      }
      const double p = alpha * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      const double q = alpha * y[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
      o.ref[u] = a.a[u] + p + q;
      o.scale[u] = std::fabs(a.a[u]) + std::fabs(p) + std::fabs(q);
    }
  o.k = 3;
  return o;
}

Outcome run_trmv(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const char uplo = pick(s.seed, 0, 'U', 'L');
  const char trans = pick(s.seed, 1, 'N', 'T');
  const char diag = pick(s.seed, 2, 'N', 'U');
  const bool upper = uplo == 'U';
  const Mat a = random_mat(rng, n, n);
  const Vec x = random_vec(rng, n);
  auto tri = [&](index_t i, index_t j) {
    if (i == j) return diag == 'U' ? 1.0 : a(i, j);
    return (upper ? i < j : i > j) ? a(i, j) : 0.0;
  };
  Outcome o;
  auto xd = to_dd(x);
  const auto lda = std::max<index_t>(1, n);
  o.dd_status = Rtrmv<dd_real>(uplo, trans, diag, n, to_dd(a.a), lda, xd, 1);
  auto xf = x;
  o.f64_status = Rtrmv<double>(uplo, trans, diag, n, a.a, lda, xf, 1);
  o.dd = round_all(xd);
  o.ref.assign(x.size(), 0.0);
  o.scale.assign(x.size(), 0.0);
  for (index_t i = 0; i < n; ++i) {
    double sum = 0.0;
    double abs_sum = 0.0;
    for (index_t l = 0; l < n; ++l) {
      const double p = (trans == 'T' ? tri(l, i) : tri(i, l)) * x[static_cast<std::size_t>(l)];
      sum += p;
      abs_sum += std::fabs(p);
    }
    o.ref[static_cast<std::size_t>(i)] = sum;
    o.scale[static_cast<std::size_t>(i)] = abs_sum;
  }
  o.k = n;
  return o;
}

Outcome run_gemm(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t m = s.m;
  const index_t n = s.n;
  const index_t k = s.n;
  const char transa = pick(s.seed, 0, 'N', 'T');
  const char transb = pick(s.seed, 1, 'N', 'T');
  const bool ta = transa == 'T';
  const bool tb = transb == 'T';
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  const Mat a = ta ? random_mat(rng, k, m) : random_mat(rng, m, k);
  const Mat b = tb ? random_mat(rng, n, k) : random_mat(rng, k, n);
  const Mat c = random_mat(rng, m, n);
  Outcome o;
  auto cd = to_dd(c.a);
  const auto lda = std::max<index_t>(1, a.m);
  const auto ldb = std::max<index_t>(1, b.m);
  const auto ldc = std::max<index_t>(1, m);
  o.dd_status = Rgemm<dd_real>(transa, transb, m, n, k, dd_real(alpha), to_dd(a.a), lda, to_dd(b.a), ldb,
                               dd_real(beta), cd, ldc);
  auto cf = c.a;
  o.f64_status = Rgemm<double>(transa, transb, m, n, k, alpha, a.a, lda, b.a, ldb, beta, cf, ldc);
  o.dd = round_all(cd);
  o.ref = c.a;
  o.scale.assign(c.a.size(), 0.0);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) {
      double sum = 0.0;
      double abs_sum = 0.0;
      for (index_t l = 0; l < k; ++l) {
        const double p = op(a, ta, i, l) * op(b, tb, l, j);
        sum += p;
        abs_sum += std::fabs(p);
      }
      const auto u = static_cast<std::size_t>(i + j * m);
      o.ref[u] = alpha * sum + beta * c.a[u];
      o.scale[u] = std::fabs(alpha) * abs_sum + std::fabs(beta * c.a[u]);
    }
  o.k = k + 2;
  return o;
}

Outcome run_syrk(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t n = s.n;
  const index_t k = std::max<index_t>(1, s.m);
  const char uplo = pick(s.seed, 0, 'U', 'L');
  const char trans = pick(s.seed, 1, 'N', 'T');
  const bool upper = uplo == 'U';
  const bool t = trans == 'T';
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  const Mat a = t ? random_mat(rng, k, n) : random_mat(rng, n, k);
  const Mat c = random_mat(rng, n, n);
  Outcome o;
  auto cd = to_dd(c.a);
  const auto lda = std::max<index_t>(1, a.m);
  const auto ldc = std::max<index_t>(1, n);
  o.dd_status = Rsyrk<dd_real>(uplo, trans, n, k, dd_real(alpha), to_dd(a.a), lda, dd_real(beta), cd, ldc);
  auto cf = c.a;
  o.f64_status = Rsyrk<double>(uplo, trans, n, k, alpha, a.a, lda, beta, cf, ldc);
  o.dd = round_all(cd);
  o.ref = c.a;
  o.scale.assign(c.a.size(), 0.0);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i + j * n);
      if (upper ? i > j : i < j) {
        o.scale[u] = std::fabs(c.a[u]);
        continue;
      }
      double sum = 0.0;
      double abs_sum = 0.0;
      for (index_t l = 0; l < k; ++l) {
        const double p = op(a, t, i, l) * op(a, t, j, l);
        sum += p;
        abs_sum += std::fabs(p);
      }
      o.ref[u] = alpha * sum + beta * c.a[u];
      o.scale[u] = std::fabs(alpha) * abs_sum + std::fabs(beta * c.a[u]);
    }
  o.k = k + 2;
  return o;
}

Outcome run_trsm(const MatrixGenSpec& s) {
  Rng rng(s.seed);
  const index_t m = s.m;
  const index_t n = s.n;
  const char side = pick(s.seed, 0, 'L', 'R');
  const char uplo = pick(s.seed, 1, 'U', 'L');
  const char transa = pick(s.seed, 2, 'N', 'T');
  const bool left = side == 'L';
  const index_t na = left ? m : n;
  const double alpha = rng.uniform();
  const Mat a = triangular(rng, na, uplo == 'U');
  const Mat b = random_mat(rng, m, n);
  Outcome o;
  auto bd = to_dd(b.a);
  const auto lda = std::max<index_t>(1, na);
  const auto ldb = std::max<index_t>(1, m);
  o.dd_status = Rtrsm<dd_real>(side, uplo, transa, 'N', m, n, dd_real(alpha), to_dd(a.a), lda, bd, ldb);
  auto bf = b.a;
  o.f64_status = Rtrsm<double>(side, uplo, transa, 'N', m, n, alpha, a.a, lda, bf, ldb);
  o.dd = round_all(bd);

  // Naive substitution on op(A) (left) or on op(A)' acting on rows (right).
  const bool ta = transa == 'T';
  auto opa = [&](index_t i, index_t j) { return ta ? a(j, i) : a(i, j); };
  Mat x{m, n, b.a};
  for (double& v : x.a) v *= alpha;
  if (left) {
    const bool lower_op = (uplo == 'L') != ta;
    for (index_t j = 0; j < n; ++j) {
      if (lower_op) {
        for (index_t i = 0; i < m; ++i) {
          double sum = x(i, j);
          for (index_t l = 0; l < i; ++l) sum -= opa(i, l) * x(l, j);
          x(i, j) = sum / opa(i, i);
        }
      } else {
        for (index_t i = m - 1; i >= 0; --i) {
          double sum = x(i, j);
          for (index_t l = i + 1; l < m; ++l) sum -= opa(i, l) * x(l, j);
          x(i, j) = sum / opa(i, i);
        }
      }
    }
  } else {
    // X*op(A) = alpha*B: column j of X depends on columns l with op(A)(l, j) != 0.
    const bool upper_op = (uplo == 'U') != ta;
    for (index_t i = 0; i < m; ++i) {
      if (upper_op) {
        for (index_t j = 0; j < n; ++j) {
          double sum = x(i, j);
          for (index_t l = 0; l < j; ++l) sum -= x(i, l) * opa(l, j);
          x(i, j) = sum / opa(j, j);
        }
      } else {
        for (index_t j = n - 1; j >= 0; --j) {
          double sum = x(i, j);
          for (index_t l = j + 1; l < n; ++l) sum -= x(i, l) * opa(l, j);
          x(i, j) = sum / opa(j, j);
        }
      }
    }
  }
  o.ref = x.a;
  o.scale.assign(x.a.size(), 0.0);
  for (std::size_t i = 0; i < x.a.size(); ++i) o.scale[i] = std::fabs(x.a[i]);
  o.normwise = true;
  o.k = na + 2;
  return o;
}

using Runner = Outcome (*)(const MatrixGenSpec&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"Raxpy", run_axpy}, {"Rscal", run_scal}, {"Rdot", run_dot},   {"Rnrm2", run_nrm2}, {"Rasum", run_asum},
      {"Rgemv", run_gemv}, {"Rger", run_ger},   {"Rsymv", run_symv}, {"Rsyr2", run_syr2}, {"Rtrmv", run_trmv},
      {"Rgemm", run_gemm}, {"Rsyrk", run_syrk}, {"Rtrsm", run_trsm},
  };
  return table;
}

std::string status_str(const BlasStatus& s) { return s ? std::to_string(s->index) : "ok"; }

}  // namespace

const std::vector<std::string>& oracle_routines() {
  static const std::vector<std::string> names = {"Raxpy", "Rscal", "Rdot",  "Rnrm2", "Rasum", "Rgemv", "Rger",
                                                 "Rsymv", "Rsyr2", "Rtrmv", "Rgemm", "Rsyrk", "Rtrsm"};
  return names;
}

ResidualReport compare_vs_oracle(const std::string& routine, const MatrixGenSpec& spec, double tolerance) {
  const auto it = runners().find(routine);
  if (it == runners().end()) throw std::invalid_argument("compare_vs_oracle: unknown routine " + routine);
  const Outcome o = it->second(spec);
  if (o.f64_status != o.dd_status) {
    throw ParityError(routine + ": binary64 status " + status_str(o.f64_status) + " != dd status " +
                      status_str(o.dd_status));
  }
  const double r = o.dd_status ? std::numeric_limits<double>::infinity() : outcome_ratio(o);
  return make_report(routine + " oracle m=" + std::to_string(spec.m) + " n=" + std::to_string(spec.n) +
                         " seed=" + std::to_string(spec.seed),
                     spec.m, spec.n, r, tolerance);
}

// ------------------------------------------------------------- parity

namespace {

template <Real T>
using Case = std::function<BlasStatus()>;

/// Invalid-argument invocations, built for one precision. Every buffer is
/// large enough that only the checked argument is wrong.
template <Real T>
std::vector<std::pair<std::string, Case<T>>> invalid_cases(const std::string& routine) {
  auto buf = std::make_shared<std::vector<T>>(64, T(1));
  auto c = [buf] { return std::span<const T>(*buf); };
  auto w = [buf] { return std::span<T>(*buf); };
  std::vector<std::pair<std::string, Case<T>>> out;
  const T one(1);
  if (routine == "Rgemm") {
    out.emplace_back("transa", [=] { return Rgemm<T>('X', 'N', 2, 2, 2, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("transb", [=] { return Rgemm<T>('N', 'X', 2, 2, 2, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("m<0", [=] { return Rgemm<T>('N', 'N', -1, 2, 2, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("n<0", [=] { return Rgemm<T>('N', 'N', 2, -1, 2, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("k<0", [=] { return Rgemm<T>('N', 'N', 2, 2, -1, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("lda", [=] { return Rgemm<T>('N', 'N', 3, 2, 2, one, c(), 2, c(), 2, one, w(), 3); });
    out.emplace_back("ldb", [=] { return Rgemm<T>('N', 'N', 2, 2, 3, one, c(), 2, c(), 2, one, w(), 2); });
    out.emplace_back("ldc", [=] { return Rgemm<T>('N', 'N', 3, 2, 2, one, c(), 3, c(), 2, one, w(), 2); });
  } else if (routine == "Rgemv") {
    out.emplace_back("trans", [=] { return Rgemv<T>('X', 2, 2, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("m<0", [=] { return Rgemv<T>('N', -1, 2, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("n<0", [=] { return Rgemv<T>('N', 2, -1, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("lda", [=] { return Rgemv<T>('N', 3, 2, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("incx", [=] { return Rgemv<T>('N', 2, 2, one, c(), 2, c(), 0, one, w(), 1); });
    out.emplace_back("incy", [=] { return Rgemv<T>('N', 2, 2, one, c(), 2, c(), 1, one, w(), 0); });
  } else if (routine == "Rger") {
    out.emplace_back("m<0", [=] { return Rger<T>(-1, 2, one, c(), 1, c(), 1, w(), 2); });
    out.emplace_back("n<0", [=] { return Rger<T>(2, -1, one, c(), 1, c(), 1, w(), 2); });
    out.emplace_back("incx", [=] { return Rger<T>(2, 2, one, c(), 0, c(), 1, w(), 2); });
    out.emplace_back("incy", [=] { return Rger<T>(2, 2, one, c(), 1, c(), 0, w(), 2); });
    out.emplace_back("lda", [=] { return Rger<T>(3, 2, one, c(), 1, c(), 1, w(), 2); });
  } else if (routine == "Rsymv") {
    out.emplace_back("uplo", [=] { return Rsymv<T>('X', 2, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("n<0", [=] { return Rsymv<T>('U', -1, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("lda", [=] { return Rsymv<T>('U', 3, one, c(), 2, c(), 1, one, w(), 1); });
    out.emplace_back("incx", [=] { return Rsymv<T>('U', 2, one, c(), 2, c(), 0, one, w(), 1); });
    out.emplace_back("incy", [=] { return Rsymv<T>('U', 2, one, c(), 2, c(), 1, one, w(), 0); });
  } else if (routine == "Rsyr2") {
    out.emplace_back("uplo", [=] { return Rsyr2<T>('X', 2, one, c(), 1, c(), 1, w(), 2); });
    out.emplace_back("n<0", [=] { return Rsyr2<T>('U', -1, one, c(), 1, c(), 1, w(), 2); });
    out.emplace_back("incx", [=] { return Rsyr2<T>('U', 2, one, c(), 0, c(), 1, w(), 2); });
    out.emplace_back("incy", [=] { return Rsyr2<T>('U', 2, one, c(), 1, c(), 0, w(), 2); });
    out.emplace_back("lda", [=] { return Rsyr2<T>('U', 3, one, c(), 1, c(), 1, w(), 2); });
  } else if (routine == "Rtrmv") {
    out.emplace_back("uplo", [=] { return Rtrmv<T>('X', 'N', 'N', 2, c(), 2, w(), 1); });
    out.emplace_back("trans", [=] { return Rtrmv<T>('U', 'X', 'N', 2, c(), 2, w(), 1); });
    out.emplace_back("diag", [=] { return Rtrmv<T>('U', 'N', 'X', 2, c(), 2, w(), 1); });
    out.emplace_back("n<0", [=] { return Rtrmv<T>('U', 'N', 'N', -1, c(), 2, w(), 1); });
    out.emplace_back("lda", [=] { return Rtrmv<T>('U', 'N', 'N', 3, c(), 2, w(), 1); });
    out.emplace_back("incx", [=] { return Rtrmv<T>('U', 'N', 'N', 2, c(), 2, w(), 0); });
  } else if (routine == "Rsyrk") {
    out.emplace_back("uplo", [=] { return Rsyrk<T>('X', 'N', 2, 2, one, c(), 2, one, w(), 2); });
    out.emplace_back("trans", [=] { return Rsyrk<T>('U', 'X', 2, 2, one, c(), 2, one, w(), 2); });
    out.emplace_back("n<0", [=] { return Rsyrk<T>('U', 'N', -1, 2, one, c(), 2, one, w(), 2); });
    out.emplace_back("k<0", [=] { return Rsyrk<T>('U', 'N', 2, -1, one, c(), 2, one, w(), 2); });
    out.emplace_back("lda", [=] { return Rsyrk<T>('U', 'N', 3, 2, one, c(), 2, one, w(), 3); });
    out.emplace_back("ldc", [=] { return Rsyrk<T>('U', 'N', 3, 2, one, c(), 3, one, w(), 2); });
  } else if (routine == "Rtrsm") {
    out.emplace_back("side", [=] { return Rtrsm<T>('X', 'U', 'N', 'N', 2, 2, one, c(), 2, w(), 2); });
    out.emplace_back("uplo", [=] { return Rtrsm<T>('L', 'X', 'N', 'N', 2, 2, one, c(), 2, w(), 2); });
    out.emplace_back("transa", [=] { return Rtrsm<T>('L', 'U', 'X', 'N', 2, 2, one, c(), 2, w(), 2); });
    out.emplace_back("diag", [=] { return Rtrsm<T>('L', 'U', 'N', 'X', 2, 2, one, c(), 2, w(), 2); });
    out.emplace_back("m<0", [=] { return Rtrsm<T>('L', 'U', 'N', 'N', -1, 2, one, c(), 2, w(), 2); });
    out.emplace_back("n<0", [=] { return Rtrsm<T>('L', 'U', 'N', 'N', 2, -1, one, c(), 2, w(), 2); });
    out.emplace_back("lda", [=] { return Rtrsm<T>('L', 'U', 'N', 'N', 3, 2, one, c(), 2, w(), 3); });
    out.emplace_back("ldb", [=] { return Rtrsm<T>('L', 'U', 'N', 'N', 3, 2, one, c(), 3, w(), 2); });
  } else {
    throw std::invalid_argument("error_parity: no invalid-argument cases for " + routine);
  }
  return out;
}

}  // namespace

std::vector<ParityCase> error_parity(const std::string& routine) {
  const auto f64 = invalid_cases<double>(routine);
  const auto dd = invalid_cases<dd_real>(routine);
  std::vector<ParityCase> out;
  for (std::size_t i = 0; i < f64.size(); ++i) {
    const BlasStatus a = f64[i].second();
    const BlasStatus b = dd[i].second();
    if (a != b) {
      throw ParityError(routine + " (" + f64[i].first + "): binary64 " + status_str(a) + " != dd " + status_str(b));
    }
    out.push_back({f64[i].first, a ? a->index : 0, b ? b->index : 0});
  }
  return out;
}

}  // namespace mpkit::testkit
