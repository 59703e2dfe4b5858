#include <cmath>
#include <algorithm>
#include <limits>

#include "mpkit/testkit.hpp"

namespace mpkit::testkit {

namespace {

const std::vector<std::string>& lapack_routines() {
  static const std::vector<std::string> names = {"Rgetrf", "Rgetrs", "Rgetri", "Rpotrf", "Rsyev", "Rgees", "Rgesvd"};
  return names;
}

template <Real T>
const char* prec_tag() {
  return std::is_same_v<T, double> ? "f64" : "dd";
}

ResidualReport failed(const std::string& name, index_t m, index_t n) {
  return make_report(name, m, n, std::numeric_limits<double>::infinity());
}

template <Real T>
void svd_case(std::vector<ResidualReport>& out, const std::string& tag, index_t m, index_t n, std::uint64_t seed) {
  const Matrix<T> a = gen_matrix<T>({MatrixKind::uniform, m, n, seed, {}});
  const auto r = svd(a);
  if (r.info != 0) {
    out.push_back(failed(tag, m, n));
    return;
  }
  for (auto& rep : residual_svd<T>(a, r.s, r.u, r.vt, tag)) out.push_back(std::move(rep));
}

}  // namespace

const std::vector<std::string>& qa_routines() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = oracle_routines();
    v.insert(v.end(), lapack_routines().begin(), lapack_routines().end());
    return v;
  }();
  return names;
}

template <Real T>
std::vector<ResidualReport> lapack_residuals(const std::string& routine, index_t n, std::uint64_t seed) {
  const std::string tag = routine + " " + prec_tag<T>() + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
  std::vector<ResidualReport> out;
  const MatrixGenSpec uni{MatrixKind::uniform, n, n, seed, {}};

  if (routine == "Rgetrf") {
    const Matrix<T> a = gen_matrix<T>(uni);
    const auto f = lu_factor(a);
    out.push_back(f.info != 0 ? failed(tag + " lu", n, n) : residual_lu<T>(a, f.lu, f.ipiv, tag + " lu"));
  } else if (routine == "Rgetrs") {
    const Matrix<T> a = gen_matrix<T>(uni);
    const Matrix<T> b = gen_matrix<T>({MatrixKind::uniform, n, 2, seed ^ 0x5bd1e995ULL, {}});
    const auto f = lu_factor(a);
    for (const char trans : {'N', 'T'}) {
      const std::string name = tag + " trans=" + trans;
      Matrix<T> x = b;
      const index_t info = f.info != 0 ? f.info
                                       : Rgetrs<T>(trans, n, 2, f.lu.span(), f.lu.ld(), f.ipiv, x.span(), x.ld());
      if (info != 0) {
        out.push_back(failed(name, n, 2));
        continue;
      }
      const Matrix<T> op = trans == 'N' ? a : transpose(a);
      out.push_back(residual_solve<T>(op, x, b, name));
      // Backward error in the infinity norm.
      Matrix<T> r = b;
      const Matrix<T> ax = detail::matmul(op, x);
      for (index_t j = 0; j < 2; ++j)
        for (index_t i = 0; i < n; ++i) r(i, j) -= ax(i, j);
      const T scale = Rlange<T>('I', n, n, op.span(), op.ld()) * Rlange<T>('I', n, 2, x.span(), x.ld());
      out.push_back(make_report(name + " backward", n, 2,
                                detail::ratio(Rlange<T>('I', n, 2, r.span(), r.ld()), n, scale)));
    }
  } else if (routine == "Rgetri") {
    const Matrix<T> a = gen_matrix<T>(uni);
    const auto inv = inverse(a);
    out.push_back(inv.info != 0 ? failed(tag + " inverse", n, n) : residual_inverse<T>(a, inv.inv, tag + " inverse"));
  } else if (routine == "Rpotrf") {
    const Matrix<T> a = gen_matrix<T>({MatrixKind::spd, n, n, seed, {}});
    for (const char uplo : {'L', 'U'}) {
      const std::string name = tag + " uplo=" + uplo;
      Matrix<T> f = a;
      const index_t info = Rpotrf<T>(uplo, n, f.span(), f.ld());
      out.push_back(info != 0 ? failed(name, n, n) : residual_chol<T>(a, f, uplo, name));
    }
  } else if (routine == "Rsyev") {
    const Matrix<T> a = gen_matrix<T>({MatrixKind::symmetric, n, n, seed, {}});
    const auto r = eig_sym(a);
    if (r.info != 0) {
      out.push_back(failed(tag, n, n));
    } else {
      for (auto& rep : residual_eig<T>(a, r.w, r.v, tag)) out.push_back(std::move(rep));
    }
  } else if (routine == "Rgees") {
    const Matrix<T> a = gen_matrix<T>(uni);
    const auto r = schur(a);
    if (r.info != 0) {
      out.push_back(failed(tag, n, n));
    } else {
      for (auto& rep : residual_schur<T>(a, r.t, r.z, tag)) out.push_back(std::move(rep));
    }
  } else if (routine == "Rgesvd") {
    svd_case<T>(out, tag, n, n, seed);
    const index_t k = n / 2 + 1;
    if (k != n) {
      svd_case<T>(out, tag + " tall", n, k, seed);
      svd_case<T>(out, tag + " wide", k, n, seed);
    }
  } else {
    throw std::invalid_argument("lapack_residuals: unknown routine " + routine);
  }
  return out;
}

template std::vector<ResidualReport> lapack_residuals<double>(const std::string&, index_t, std::uint64_t);
template std::vector<ResidualReport> lapack_residuals<dd_real>(const std::string&, index_t, std::uint64_t);

std::vector<ResidualReport> run_qa(const QaOptions& opt) {
  const auto& all = qa_routines();
  if (!opt.routine.empty() && std::find(all.begin(), all.end(), opt.routine) == all.end())
    throw std::invalid_argument("qa: unknown routine " + opt.routine);
  if (opt.seeds < 1) throw std::invalid_argument("qa: seeds must be >= 1");
  const auto& blas = oracle_routines();
  std::vector<ResidualReport> out;
  for (const auto& routine : all) {
    if (!opt.routine.empty() && routine != opt.routine) continue;
    const bool is_blas = std::find(blas.begin(), blas.end(), routine) != blas.end();
    for (const index_t n : opt.sizes) {
      if (n > opt.nmax) continue;
      for (int s = 0; s < opt.seeds; ++s) {
        std::uint64_t state = opt.base_seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(s);
        const std::uint64_t seed = splitmix64(state);
        if (is_blas) {
          // Alternate square and rectangular shapes.
          const index_t m = n + (s % 2);
          out.push_back(compare_vs_oracle(routine, {MatrixKind::uniform, m, n, seed, {}}));
        } else {
          for (auto& r : lapack_residuals<double>(routine, n, seed)) out.push_back(std::move(r));
          for (auto& r : lapack_residuals<dd_real>(routine, n, seed)) out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

}  // namespace mpkit::testkit
