#pragma once

// LAPACK driver subset over any Real scalar, plus value-returning
// convenience wrappers built on the workspace-query protocol.

#include <vector>

#include "mpkit/lapack/aux.hpp"
#include "mpkit/lapack/eig.hpp"
#include "mpkit/lapack/lin.hpp"
#include "mpkit/lapack/svd.hpp"
#include "mpkit/matrix.hpp"

namespace mpkit {

template <Real T>
struct LuResult {
  Matrix<T> lu;
  std::vector<index_t> ipiv;
  index_t info = 0;
};

template <Real T>
struct InverseResult {
  Matrix<T> inv;
  index_t info = 0;
};

template <Real T>
struct EigenResult {
  std::vector<T> w;  // ascending
  Matrix<T> v;       // eigenvectors in columns (empty if not requested)
  index_t info = 0;
};

template <Real T>
struct SchurResult {
  Matrix<T> t;
  Matrix<T> z;
  std::vector<T> wr;
  std::vector<T> wi;
  index_t info = 0;
};

template <Real T>
struct SvdResult {
  std::vector<T> s;  // descending
  Matrix<T> u;
  Matrix<T> vt;
  index_t info = 0;
};

namespace detail {

template <Real T>
index_t queried(const std::vector<T>& probe) {
  return static_cast<index_t>(to_double(probe[0]));
}

}  // namespace detail

template <Real T>
LuResult<T> lu_factor(const Matrix<T>& a) {
  LuResult<T> r{a, std::vector<index_t>(static_cast<std::size_t>(std::min(a.rows(), a.cols()))), 0};
  r.info = Rgetrf<T>(a.rows(), a.cols(), r.lu.span(), r.lu.ld(), r.ipiv);
  return r;
}

/// A^-1 via Rgetrf + Rgetri.
template <Real T>
InverseResult<T> inverse(const Matrix<T>& a) {
  const index_t n = a.rows();
  InverseResult<T> r{a, 0};
  std::vector<index_t> ipiv(static_cast<std::size_t>(n));
  r.info = Rgetrf<T>(n, n, r.inv.span(), r.inv.ld(), ipiv);
  if (r.info != 0) return r;
  std::vector<T> probe(1);
  (void)Rgetri<T>(n, r.inv.span(), r.inv.ld(), ipiv, probe, -1);
  std::vector<T> work(static_cast<std::size_t>(detail::queried(probe)));
  r.info = Rgetri<T>(n, r.inv.span(), r.inv.ld(), ipiv, work, static_cast<index_t>(work.size()));
  return r;
}

template <Real T>
EigenResult<T> eig_sym(const Matrix<T>& a, bool vectors = true) {
  const index_t n = a.rows();
  Matrix<T> v = a;
  EigenResult<T> r;
  r.w.resize(static_cast<std::size_t>(n));
  std::vector<T> probe(1);
  const char jobz = vectors ? 'V' : 'N';
  (void)Rsyev<T>(jobz, 'U', n, v.span(), v.ld(), r.w, probe, -1);
  std::vector<T> work(static_cast<std::size_t>(detail::queried(probe)));
  r.info = Rsyev<T>(jobz, 'U', n, v.span(), v.ld(), r.w, work, static_cast<index_t>(work.size()));
  if (vectors) r.v = std::move(v);
  return r;
}

template <Real T>
SchurResult<T> schur(const Matrix<T>& a, bool vectors = true) {
  const index_t n = a.rows();
  SchurResult<T> r{a, Matrix<T>(n, n), std::vector<T>(static_cast<std::size_t>(n)),
                   std::vector<T>(static_cast<std::size_t>(n)), 0};
  const char jobvs = vectors ? 'V' : 'N';
  std::vector<T> probe(1);
  (void)Rgees<T>(jobvs, n, r.t.span(), r.t.ld(), r.wr, r.wi, r.z.span(), r.z.ld(), probe, -1);
  std::vector<T> work(static_cast<std::size_t>(detail::queried(probe)));
  r.info = Rgees<T>(jobvs, n, r.t.span(), r.t.ld(), r.wr, r.wi, r.z.span(), r.z.ld(), work,
                    static_cast<index_t>(work.size()));
  return r;
}

template <Real T>
SvdResult<T> svd(const Matrix<T>& a, bool vectors = true) {
  const index_t m = a.rows();
  const index_t n = a.cols();
  Matrix<T> work_a = a;
  SvdResult<T> r{std::vector<T>(static_cast<std::size_t>(std::min(m, n))), Matrix<T>(m, m), Matrix<T>(n, n), 0};
  const char job = vectors ? 'A' : 'N';
  std::vector<T> probe(1);
  (void)Rgesvd<T>(job, job, m, n, work_a.span(), work_a.ld(), r.s, r.u.span(), r.u.ld(), r.vt.span(), r.vt.ld(),
                  probe, -1);
  std::vector<T> work(static_cast<std::size_t>(detail::queried(probe)));
  r.info = Rgesvd<T>(job, job, m, n, work_a.span(), work_a.ld(), r.s, r.u.span(), r.u.ld(), r.vt.span(), r.vt.ld(),
                     work, static_cast<index_t>(work.size()));
  return r;
}

}  // namespace mpkit
