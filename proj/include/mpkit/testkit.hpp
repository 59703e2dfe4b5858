#pragma once

// Quality assurance: reproducible matrix generators, LAPACK-style residual
// ratios, comparison of dd kernels against an independent binary64 oracle,
// the Hilbert inversion study, and report formatting.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpkit/dd_io.hpp"
#include "mpkit/machine_params.hpp"
#include "mpkit/matrix.hpp"
#include "mpkit/mpblas.hpp"
#include "mpkit/mplapack.hpp"

namespace mpkit::testkit {

inline constexpr double kThreshold = 30.0;

// ---------------------------------------------------------------- generators

enum class MatrixKind { uniform, symmetric, spd, hilbert, frank, diagonal };

struct MatrixGenSpec {
  MatrixKind kind = MatrixKind::uniform;
  index_t m = 0;
  index_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> diag;  // entries for MatrixKind::diagonal
};

/// SplitMix64 step; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Exact binary64 values uniform on the grid k*2^-52 in [-1, 1). The
/// mapping from mt19937_64 output is fixed, so streams are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::vector<double> random_vector(index_t n, std::uint64_t seed);

/// Random kinds, Frank and diagonal as binary64 (exact in every precision).
/// Hilbert entries are 1/(i+j+1) rounded to binary64. SPD is M'M + nI
/// computed in double-double and rounded once.
Matrix<double> gen_matrix_f64(const MatrixGenSpec& spec);

/// The matrix at precision T. Hilbert entries are correctly rounded to T;
/// every other kind is the binary64 matrix converted exactly.
template <Real T>
Matrix<T> gen_matrix(const MatrixGenSpec& spec);

template <>
Matrix<double> gen_matrix<double>(const MatrixGenSpec& spec);
template <>
Matrix<dd_real> gen_matrix<dd_real>(const MatrixGenSpec& spec);

MatrixKind parse_kind(const std::string& name);
std::string kind_name(MatrixKind kind);

// ------------------------------------------------------------------ reports

struct ResidualReport {
  std::string name;
  index_t m = 0;
  index_t n = 0;
  double ratio = 0.0;
  double threshold = kThreshold;
  bool passed = true;
};

ResidualReport make_report(std::string name, index_t m, index_t n, double ratio, double threshold = kThreshold);

/// "name m n ratio threshold PASS|FAIL"
std::string format_line(const ResidualReport& r);
inline constexpr const char* kReportCsvHeader = "name,m,n,ratio,threshold,result";
std::string format_csv_row(const ResidualReport& r);
void write_text(std::ostream& os, std::span<const ResidualReport> reports);
void write_csv(std::ostream& os, std::span<const ResidualReport> reports);
std::vector<ResidualReport> parse_csv(std::istream& is);

// ---------------------------------------------------------------- residuals

namespace detail {

template <Real T>
T norm1(const Matrix<T>& a) {
  return Rlange<T>('1', a.rows(), a.cols(), a.span(), a.ld());
}

template <Real T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (index_t j = 0; j < b.cols(); ++j)
    for (index_t l = 0; l < a.cols(); ++l) {
      const T t = b(l, j);
      for (index_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, l) * t;
    }
  return c;
}

/// ||Q'Q - I||_1 / (n eps) for the n columns of Q (rows if by_rows).
template <Real T>
double orthogonality(const Matrix<T>& q, bool by_rows = false) {
  const Matrix<T> qq = by_rows ? matmul(q, transpose(q)) : matmul(transpose(q), q);
  Matrix<T> r = qq;
  for (index_t i = 0; i < r.rows(); ++i) r(i, i) -= T(1);
  const index_t n = std::max<index_t>(1, r.rows());
  return to_double(norm1(r) / (T(n) * Rlamch<T>('E')));
}

/// res / (dim * anorm * eps), with LAPACK's convention 1/eps when anorm == 0
/// and res != 0.
template <Real T>
double ratio(const T& res, index_t dim, const T& anorm) {
  const T eps = Rlamch<T>('E');
  if (anorm == T(0)) return res == T(0) ? 0.0 : to_double(T(1) / eps);
  return to_double(((res / anorm) / T(std::max<index_t>(1, dim))) / eps);
}

}  // namespace detail

/// ||L*U - P*A||_1 / (n ||A||_1 eps) with the factors of Rgetrf.
template <Real T>
ResidualReport residual_lu(const Matrix<T>& a, const Matrix<T>& lu, std::span<const index_t> ipiv,
                           const std::string& name = "lu") {
  const index_t m = a.rows();
  const index_t n = a.cols();
  if (lu.rows() != m || lu.cols() != n) throw std::invalid_argument("residual_lu: dimension mismatch");
  const index_t k = std::min(m, n);
  Matrix<T> l(m, k);
  Matrix<T> u(k, n);
  for (index_t j = 0; j < k; ++j)
    for (index_t i = 0; i < m; ++i) l(i, j) = i == j ? T(1) : (i > j ? lu(i, j) : T(0));
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i <= std::min(j, k - 1); ++i) u(i, j) = lu(i, j);
  Matrix<T> pa = a;
  Rlaswp<T>(n, pa.span(), pa.ld(), 1, k, ipiv, 1);
  Matrix<T> r = detail::matmul(l, u);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) r(i, j) -= pa(i, j);
  return make_report(name, m, n, detail::ratio(detail::norm1(r), n, detail::norm1(a)));
}

/// ||B - A*X||_1 / (n ||A||_1 ||X||_1 eps).
template <Real T>
ResidualReport residual_solve(const Matrix<T>& a, const Matrix<T>& x, const Matrix<T>& b,
                              const std::string& name = "solve") {
  if (a.cols() != x.rows() || a.rows() != b.rows() || x.cols() != b.cols())
    throw std::invalid_argument("residual_solve: dimension mismatch");
  Matrix<T> r = b;
  const Matrix<T> ax = detail::matmul(a, x);
  for (index_t j = 0; j < r.cols(); ++j)
    for (index_t i = 0; i < r.rows(); ++i) r(i, j) -= ax(i, j);
  const T xnorm = detail::norm1(x);
  const T scale = detail::norm1(a) * (xnorm == T(0) ? T(1) : xnorm);
  return make_report(name, a.rows(), x.cols(), detail::ratio(detail::norm1(r), a.cols(), scale));
}

/// ||inv(A)*A - I||_1 / (n ||A||_1 ||inv(A)||_1 eps).
template <Real T>
ResidualReport residual_inverse(const Matrix<T>& a, const Matrix<T>& ainv, const std::string& name = "inverse") {
  if (a.rows() != a.cols() || ainv.rows() != a.rows() || ainv.cols() != a.cols())
    throw std::invalid_argument("residual_inverse: dimension mismatch");
  Matrix<T> r = detail::matmul(ainv, a);
  for (index_t i = 0; i < r.rows(); ++i) r(i, i) -= T(1);
  const T scale = detail::norm1(a) * detail::norm1(ainv);
  return make_report(name, a.rows(), a.cols(), detail::ratio(detail::norm1(r), a.rows(), scale));
}

/// ||L*L' - A||_1 / (n ||A||_1 eps) (uplo 'L'), or ||U'*U - A|| (uplo 'U').
template <Real T>
ResidualReport residual_chol(const Matrix<T>& a, const Matrix<T>& factor, char uplo,
                             const std::string& name = "chol") {
  const index_t n = a.rows();
  if (a.cols() != n || factor.rows() != n || factor.cols() != n)
    throw std::invalid_argument("residual_chol: dimension mismatch");
  const bool upper = lsame(uplo, 'U');
  Matrix<T> f(n, n);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i)
      if (upper ? i <= j : i >= j) f(i, j) = factor(i, j);
  Matrix<T> r = upper ? detail::matmul(transpose(f), f) : detail::matmul(f, transpose(f));
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) r(i, j) -= a(i, j);
  return make_report(name, n, n, detail::ratio(detail::norm1(r), n, detail::norm1(a)));
}

/// ||A*V - V*diag(w)||_1 / (n ||A||_1 eps) and ||V'V - I||_1 / (n eps).
template <Real T>
std::vector<ResidualReport> residual_eig(const Matrix<T>& a, std::span<const T> w, const Matrix<T>& v,
                                         const std::string& name = "eig") {
  const index_t n = a.rows();
  if (a.cols() != n || v.rows() != n || v.cols() != n || static_cast<index_t>(w.size()) != n)
    throw std::invalid_argument("residual_eig: dimension mismatch");
  Matrix<T> r = detail::matmul(a, v);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) r(i, j) -= v(i, j) * w[j];
  return {make_report(name + " resid", n, n, detail::ratio(detail::norm1(r), n, detail::norm1(a))),
          make_report(name + " orth", n, n, detail::orthogonality(v))};
}

/// ||A - Z*T*Z'||_1 / (n ||A||_1 eps) and ||Z'Z - I||_1 / (n eps).
template <Real T>
std::vector<ResidualReport> residual_schur(const Matrix<T>& a, const Matrix<T>& t, const Matrix<T>& z,
                                           const std::string& name = "schur") {
  const index_t n = a.rows();
  if (a.cols() != n || t.rows() != n || t.cols() != n || z.rows() != n || z.cols() != n)
    throw std::invalid_argument("residual_schur: dimension mismatch");
  Matrix<T> r = detail::matmul(detail::matmul(z, t), transpose(z));
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < n; ++i) r(i, j) -= a(i, j);
  return {make_report(name + " resid", n, n, detail::ratio(detail::norm1(r), n, detail::norm1(a))),
          make_report(name + " orth", n, n, detail::orthogonality(z))};
}

/// ||A - U*S*VT||_1 / (max(m,n) ||A||_1 eps), ||U'U - I||_1 / (m eps),
/// ||VT*VT' - I||_1 / (n eps).
template <Real T>
std::vector<ResidualReport> residual_svd(const Matrix<T>& a, std::span<const T> s, const Matrix<T>& u,
                                         const Matrix<T>& vt, const std::string& name = "svd") {
  const index_t m = a.rows();
  const index_t n = a.cols();
  const index_t k = std::min(m, n);
  if (u.rows() != m || u.cols() != m || vt.rows() != n || vt.cols() != n || static_cast<index_t>(s.size()) != k)
    throw std::invalid_argument("residual_svd: dimension mismatch");
  Matrix<T> us(m, n);
  for (index_t j = 0; j < k; ++j)
    for (index_t i = 0; i < m; ++i) us(i, j) = u(i, j) * s[j];
  Matrix<T> r = detail::matmul(us, vt);
  for (index_t j = 0; j < n; ++j)
    for (index_t i = 0; i < m; ++i) r(i, j) -= a(i, j);
  return {make_report(name + " resid", m, n, detail::ratio(detail::norm1(r), std::max(m, n), detail::norm1(a))),
          make_report(name + " orthU", m, m, detail::orthogonality(u)),
          make_report(name + " orthVT", n, n, detail::orthogonality(vt, true))};
}

// ------------------------------------------------------------ oracle tests

/// Raised when the dd and binary64 instantiations disagree on an argument
/// error.
class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// BLAS routines covered by compare_vs_oracle.
const std::vector<std::string>& oracle_routines();

/// Runs the dd kernel and an independent naive binary64 implementation on
/// the same binary64 inputs (drawn from spec.seed, sizes spec.m x spec.n).
/// ratio = max_i |round(dd_i) - f64_i| / (k * eps64 * scale_i), where
/// scale_i is the same expression evaluated on absolute values and k the
/// inner dimension. Also checks that the binary64 and dd generic kernels
/// return the same status; throws ParityError otherwise.
ResidualReport compare_vs_oracle(const std::string& routine, const MatrixGenSpec& spec,
                                 double tolerance = kThreshold);

/// Invalid-argument cases for routine, run at both precisions. Returns the
/// cases as (description, f64 status, dd status); throws ParityError on the
/// first mismatch.
struct ParityCase {
  std::string description;
  int f64_index = 0;
  int dd_index = 0;
};
std::vector<ParityCase> error_parity(const std::string& routine);

// ---------------------------------------------------------- Hilbert study

struct HilbertRow {
  index_t n = 0;
  double infnorm = 0.0;  // ||inv(H)*H - I||_inf
  index_t info = 0;
};

template <Real T>
HilbertRow hilbert_infnorm(index_t n) {
  const Matrix<T> h = gen_matrix<T>({MatrixKind::hilbert, n, n, 0, {}});
  const auto inv = inverse(h);
  if (inv.info != 0) return {n, std::numeric_limits<double>::quiet_NaN(), inv.info};
  Matrix<T> c(n, n);
  (void)Rgemm<T>('N', 'N', n, n, n, T(1), inv.inv.span(), n, h.span(), n, T(0), c.span(), n);
  for (index_t i = 0; i < n; ++i) c(i, i) -= T(1);
  return {n, to_double(Rlange<T>('I', n, n, c.span(), n)), 0};
}

std::vector<HilbertRow> hilbert_infnorm_study(index_t n_max, Precision precision);

// ------------------------------------------------------------- QA suite

struct QaOptions {
  int seeds = 20;
  index_t nmax = 50;
  std::vector<index_t> sizes = {1, 2, 3, 5, 10, 50};
  std::string routine;  // empty: all
  std::uint64_t base_seed = 0x6d706b6974ULL;
};

/// Routines of the residual suite, in run order.
const std::vector<std::string>& qa_routines();

/// Residual suite: for every routine, size <= nmax and seed, the BLAS
/// oracle comparison (dd vs naive binary64) or the LAPACK residual ratios at
/// both precisions.
std::vector<ResidualReport> run_qa(const QaOptions& opt);

/// Residual reports for one LAPACK routine on one seeded input.
template <Real T>
std::vector<ResidualReport> lapack_residuals(const std::string& routine, index_t n, std::uint64_t seed);

}  // namespace mpkit::testkit
