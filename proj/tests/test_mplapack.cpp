#include <gtest/gtest.h>

#include <algorithm>

#include "mpkit/dd_io.hpp"
#include "mpkit/testkit.hpp"
#include "support.hpp"

using namespace mpkit;
using testkit::MatrixGenSpec;
using testkit::MatrixKind;

namespace {

template <class T>
T eps() {
  return Rlamch<T>('E');
}

template <class T>
void expect_ratios(const std::vector<testkit::ResidualReport>& reports) {
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << testkit::format_line(r);
}

template <class T>
void expect_close(const T& got, double want, double tol_eps, const std::string& what) {
  const T tol = T(tol_eps) * eps<T>() * mpkit::max(T(1), mpkit::abs(T(want)));
  EXPECT_LE(mpkit::abs(got - T(want)), tol) << what << ": " << to_double(got) << " vs " << want;
}

template <class T>
Matrix<T> random_matrix(index_t m, index_t n, std::uint64_t seed, MatrixKind kind = MatrixKind::uniform) {
  return testkit::gen_matrix<T>(MatrixGenSpec{kind, m, n, seed, {}});
}

}  // namespace

template <class T>
class Lapack : public ::testing::Test {};
using Precisions = ::testing::Types<double, dd_real>;
TYPED_TEST_SUITE(Lapack, Precisions);

TYPED_TEST(Lapack, GetrfIdentity) {
  using T = TypeParam;
  auto a = Matrix<T>::identity(4);
  std::vector<index_t> ipiv(4);
  EXPECT_EQ(Rgetrf<T>(4, 4, a.span(), 4, ipiv), 0);
  EXPECT_EQ(a, Matrix<T>::identity(4));
  EXPECT_EQ(ipiv, (std::vector<index_t>{1, 2, 3, 4}));
}

TYPED_TEST(Lapack, GetrfPivotsAndSingularInfo) {
  using T = TypeParam;
  auto a = Matrix<T>::from_rows({{T(1), T(2)}, {T(-3), T(4)}});
  std::vector<index_t> ipiv(2);
  EXPECT_EQ(Rgetrf<T>(2, 2, a.span(), 2, ipiv), 0);
  EXPECT_EQ(ipiv[0], 2);
  EXPECT_EQ(a(0, 0), T(-3));

  // Ties go to the smallest row index.
  auto tie = Matrix<T>::from_rows({{T(2), T(1)}, {T(-2), T(5)}});
  EXPECT_EQ(Rgetrf<T>(2, 2, tie.span(), 2, ipiv), 0);
  EXPECT_EQ(ipiv[0], 1);

  auto s = Matrix<T>::from_rows({{T(1), T(2), T(3)}, {T(2), T(4), T(6)}, {T(1), T(1), T(1)}});
  std::vector<index_t> p3(3);
  EXPECT_EQ(Rgetrf<T>(3, 3, s.span(), 3, p3), 3);

  std::vector<T> b{T(1), T(2), T(3)};
  const auto b0 = b;
  EXPECT_EQ(Rgetrs<T>('N', 3, 1, s.span(), 3, p3, b, 3), 3);
  EXPECT_EQ(b, b0);
  EXPECT_EQ(inverse(Matrix<T>::from_rows({{T(0), T(0)}, {T(0), T(1)}})).info, 1);
}

TYPED_TEST(Lapack, ArgumentErrors) {
  using T = TypeParam;
  Matrix<T> a(3, 3);
  std::vector<index_t> ipiv(3);
  std::vector<T> v(3), work(64);
  EXPECT_EQ(Rgetrf<T>(-1, 3, a.span(), 3, ipiv), -1);
  EXPECT_EQ(Rgetrf<T>(3, -1, a.span(), 3, ipiv), -2);
  EXPECT_EQ(Rgetrf<T>(3, 3, a.span(), 2, ipiv), -4);
  EXPECT_EQ(Rgetrs<T>('Z', 3, 1, a.span(), 3, ipiv, v, 3), -1);
  EXPECT_EQ(Rgetrs<T>('N', 3, -1, a.span(), 3, ipiv, v, 3), -3);
  EXPECT_EQ(Rgetrs<T>('N', 3, 1, a.span(), 3, ipiv, v, 2), -8);
  EXPECT_EQ(Rgetri<T>(3, a.span(), 3, ipiv, work, 2), -6);
  EXPECT_EQ(Rpotrf<T>('X', 3, a.span(), 3), -1);
  EXPECT_EQ(Rpotrf<T>('L', 3, a.span(), 1), -4);
  EXPECT_EQ(Rsyev<T>('Q', 'U', 3, a.span(), 3, v, work, 64), -1);
  EXPECT_EQ(Rsyev<T>('V', 'U', 3, a.span(), 3, v, work, 1), -8);
  EXPECT_EQ(Rgees<T>('V', 3, a.span(), 3, v, v, a.span(), 2, work, 64), -8);
  EXPECT_EQ(Rgesvd<T>('S', 'A', 3, 3, a.span(), 3, v, a.span(), 3, a.span(), 3, work, 64), -1);
  EXPECT_EQ(Rgesvd<T>('A', 'A', 3, 3, a.span(), 3, v, a.span(), 3, a.span(), 3, work, 1), -13);
}

TYPED_TEST(Lapack, DegenerateShapes) {
  using T = TypeParam;
  Matrix<T> a(0, 0);
  std::vector<index_t> ipiv;
  std::vector<T> w, work(1);
  EXPECT_EQ(Rgetrf<T>(0, 0, a.span(), 1, ipiv), 0);
  EXPECT_EQ(Rpotrf<T>('U', 0, a.span(), 1), 0);
  EXPECT_EQ(Rsyev<T>('V', 'U', 0, a.span(), 1, w, work, 1), 0);
  EXPECT_EQ(eig_sym(a).info, 0);
  EXPECT_EQ(schur(a).info, 0);
  const auto r = svd(Matrix<T>(0, 3));
  EXPECT_EQ(r.info, 0);
  EXPECT_TRUE(r.s.empty());
  EXPECT_EQ(r.vt, Matrix<T>::identity(3));
  EXPECT_EQ(r.u.rows(), 0);
}

TYPED_TEST(Lapack, HilbertThreeInverse) {
  using T = TypeParam;
  const auto h = testkit::gen_matrix<dd_real>({MatrixKind::hilbert, 3, 3, 0, {}});
  if constexpr (std::is_same_v<T, dd_real>) {
    const auto r = inverse(h);
    ASSERT_EQ(r.info, 0);
    const double want[3][3] = {{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}};
    // 10 eps times the inverse's entry size, with the conditioning of H3 (~748) folded in.
    for (index_t i = 0; i < 3; ++i)
      for (index_t j = 0; j < 3; ++j)
        EXPECT_LE(mpkit::abs(r.inv(i, j) - dd_real(want[i][j])), dd_real(10 * 748) * eps<dd_real>() * dd_real(192))
            << i << j;
  } else {
    const auto r = inverse(testkit::gen_matrix<double>({MatrixKind::hilbert, 3, 3, 0, {}}));
    ASSERT_EQ(r.info, 0);
    EXPECT_NEAR(r.inv(1, 1), 192.0, 1e-10);
  }
}

TYPED_TEST(Lapack, GetrsExamples) {
  using T = TypeParam;
  auto eye = Matrix<T>::identity(3);
  std::vector<index_t> ipiv(3);
  ASSERT_EQ(Rgetrf<T>(3, 3, eye.span(), 3, ipiv), 0);
  std::vector<T> b{T(4), T(-1), T(7)};
  const auto b0 = b;
  ASSERT_EQ(Rgetrs<T>('N', 3, 1, eye.span(), 3, ipiv, b, 3), 0);
  EXPECT_EQ(b, b0);

  auto d = Matrix<T>::from_rows({{T(2), T(0)}, {T(0), T(2)}});
  std::vector<index_t> p2(2);
  ASSERT_EQ(Rgetrf<T>(2, 2, d.span(), 2, p2), 0);
  std::vector<T> x{T(2), T(4)};
  ASSERT_EQ(Rgetrs<T>('T', 2, 1, d.span(), 2, p2, x, 2), 0);
  EXPECT_EQ(x, (std::vector<T>{T(1), T(2)}));
}

TYPED_TEST(Lapack, RandomFactorizationsAndSolves) {
  using T = TypeParam;
  for (const index_t n : {1, 2, 7, 20, 50}) {
    const auto a = random_matrix<T>(n, n, 100 + static_cast<std::uint64_t>(n));
    const auto lu = lu_factor(a);
    ASSERT_EQ(lu.info, 0);
    expect_ratios<T>({testkit::residual_lu(a, lu.lu, lu.ipiv)});
    for (const char t : {'N', 'T'}) {
      const auto b = random_matrix<T>(n, 3, 200 + static_cast<std::uint64_t>(n));
      auto x = b;
      ASSERT_EQ(Rgetrs<T>(t, n, 3, lu.lu.span(), n, lu.ipiv, x.span(), n), 0);
      expect_ratios<T>({testkit::residual_solve(t == 'N' ? a : transpose(a), x, b)});
    }
    const auto inv = inverse(a);
    ASSERT_EQ(inv.info, 0);
    expect_ratios<T>({testkit::residual_inverse(a, inv.inv)});

    const auto spd = random_matrix<T>(n, n, 300 + static_cast<std::uint64_t>(n), MatrixKind::spd);
    for (const char uplo : {'U', 'L'}) {
      auto f = spd;
      ASSERT_EQ(Rpotrf<T>(uplo, n, f.span(), n), 0);
      expect_ratios<T>({testkit::residual_chol(spd, f, uplo)});
    }
  }
}

TYPED_TEST(Lapack, PotrfExamples) {
  using T = TypeParam;
  auto a = Matrix<T>::from_rows({{T(4), T(2)}, {T(2), T(3)}});
  ASSERT_EQ(Rpotrf<T>('L', 2, a.span(), 2), 0);
  EXPECT_EQ(a(0, 0), T(2));
  EXPECT_EQ(a(1, 0), T(1));
  EXPECT_EQ(a(1, 1), mpkit::sqrt(T(2)));
  auto eye = Matrix<T>::identity(3);
  ASSERT_EQ(Rpotrf<T>('U', 3, eye.span(), 3), 0);
  EXPECT_EQ(eye, Matrix<T>::identity(3));
  auto indef = Matrix<T>::from_rows({{T(1), T(2)}, {T(2), T(1)}});
  EXPECT_EQ(Rpotrf<T>('U', 2, indef.span(), 2), 2);
}

TYPED_TEST(Lapack, SyevWorkedInstance) {
  using T = TypeParam;
  const auto a = Matrix<T>::from_rows(
      {{T(5), T(4), T(1), T(1)}, {T(4), T(5), T(1), T(1)}, {T(1), T(1), T(4), T(2)}, {T(1), T(1), T(2), T(4)}});
  const auto r = eig_sym(a);
  ASSERT_EQ(r.info, 0);
  const double want[] = {1, 2, 5, 10};
  for (int i = 0; i < 4; ++i) expect_close<T>(r.w[static_cast<std::size_t>(i)], want[i], 100, "w");
  expect_ratios<T>(testkit::residual_eig<T>(a, r.w, r.v));
}

TYPED_TEST(Lapack, SyevDiagonalAndFrank) {
  using T = TypeParam;
  const auto d = testkit::gen_matrix<T>({MatrixKind::diagonal, 4, 4, 0, {3, -1, 7, 0.5}});
  const auto r = eig_sym(d);
  ASSERT_EQ(r.info, 0);
  EXPECT_EQ(r.w, (std::vector<T>{T(-1), T(0.5), T(3), T(7)}));
  for (index_t j = 0; j < 4; ++j) {
    index_t nonzero = 0;
    for (index_t i = 0; i < 4; ++i) {
      if (r.v(i, j) != T(0)) {
        ++nonzero;
        EXPECT_EQ(mpkit::abs(r.v(i, j)), T(1));
      }
    }
    EXPECT_EQ(nonzero, 1);
  }

  // Frank matrices are not symmetric; F'F is, with det(F) = 1 so the
  // eigenvalues of F'F multiply to 1.
  const auto f = testkit::gen_matrix<T>({MatrixKind::frank, 6, 6, 0, {}});
  const auto ftf = testkit::detail::matmul(transpose(f), f);
  const auto e = eig_sym(ftf);
  ASSERT_EQ(e.info, 0);
  T prod(1);
  for (const T& w : e.w) prod *= w;
  expect_close<T>(prod, 1.0, 1e7, "det");
  expect_ratios<T>(testkit::residual_eig<T>(ftf, e.w, e.v));
  EXPECT_TRUE(std::ranges::is_sorted(e.w));
}

TYPED_TEST(Lapack, SyevRandom) {
  using T = TypeParam;
  for (const index_t n : {2, 5, 17, 50}) {
    const auto a = random_matrix<T>(n, n, 400 + static_cast<std::uint64_t>(n), MatrixKind::symmetric);
    const auto r = eig_sym(a);
    ASSERT_EQ(r.info, 0);
    EXPECT_TRUE(std::ranges::is_sorted(r.w));
    expect_ratios<T>(testkit::residual_eig<T>(a, r.w, r.v));
    const auto values_only = eig_sym(a, false);
    ASSERT_EQ(values_only.info, 0);
    for (index_t i = 0; i < n; ++i)
      EXPECT_LE(mpkit::abs(values_only.w[i] - r.w[i]), T(30 * n) * eps<T>() * testkit::detail::norm1(a));
  }
}

namespace {

template <class T>
void expect_spectrum(const SchurResult<T>& r, std::vector<std::pair<double, double>> want) {
  std::vector<std::pair<double, double>> got;
  for (std::size_t i = 0; i < r.wr.size(); ++i) got.emplace_back(to_double(r.wr[i]), to_double(r.wi[i]));
  std::ranges::sort(got);
  std::ranges::sort(want);
  ASSERT_EQ(got.size(), want.size());
  const double tol = 100 * to_double(eps<T>()) * 20;
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].first, want[i].first, tol);
    EXPECT_NEAR(got[i].second, want[i].second, tol);
  }
}

}  // namespace

TYPED_TEST(Lapack, GeesWorkedInstances) {
  using T = TypeParam;
  const auto a = Matrix<T>::from_rows(
      {{T(-2), T(2), T(2), T(2)}, {T(-3), T(3), T(2), T(2)}, {T(-2), T(0), T(4), T(2)}, {T(-1), T(0), T(0), T(5)}});
  const auto r = schur(a);
  ASSERT_EQ(r.info, 0);
  expect_spectrum(r, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  expect_ratios<T>(testkit::residual_schur<T>(a, r.t, r.z));

  const auto b = Matrix<T>::from_rows(
      {{T(4), T(-5), T(0), T(3)}, {T(0), T(4), T(-3), T(-5)}, {T(5), T(-3), T(4), T(0)}, {T(3), T(0), T(5), T(4)}});
  const auto s = schur(b);
  ASSERT_EQ(s.info, 0);
  expect_spectrum(s, {{12, 0}, {1, 5}, {1, -5}, {2, 0}});
  expect_ratios<T>(testkit::residual_schur<T>(b, s.t, s.z));
  // Conjugate pair: +wi first, equal diagonal entries in the 2x2 block.
  for (index_t i = 0; i + 1 < 4; ++i) {
    if (s.wi[i] != T(0)) {
      EXPECT_GT(s.wi[i], T(0));
      EXPECT_EQ(s.wi[i + 1], -s.wi[i]);
      EXPECT_EQ(s.t(i, i), s.t(i + 1, i + 1));
      break;
    }
  }
}

TYPED_TEST(Lapack, GeesTriangularAndRandom) {
  using T = TypeParam;
  const auto u = Matrix<T>::from_rows({{T(1), T(5), T(-2)}, {T(0), T(-3), T(4)}, {T(0), T(0), T(6)}});
  const auto r = schur(u);
  ASSERT_EQ(r.info, 0);
  EXPECT_EQ(r.wr, (std::vector<T>{T(1), T(-3), T(6)}));
  EXPECT_EQ(r.wi, (std::vector<T>(3, T(0))));
  for (const index_t n : {2, 6, 25, 50}) {
    const auto a = random_matrix<T>(n, n, 500 + static_cast<std::uint64_t>(n));
    const auto s = schur(a);
    ASSERT_EQ(s.info, 0);
    expect_ratios<T>(testkit::residual_schur<T>(a, s.t, s.z));
    for (index_t j = 0; j < n; ++j)
      for (index_t i = j + 2; i < n; ++i) EXPECT_EQ(s.t(i, j), T(0));
    for (index_t i = 0; i + 2 < n; ++i)  // no two consecutive subdiagonal entries
      EXPECT_TRUE(s.t(i + 1, i) == T(0) || s.t(i + 2, i + 1) == T(0));
  }
}

TYPED_TEST(Lapack, GesvdWorkedInstance) {
  using T = TypeParam;
  Matrix<T> a(4, 5);
  a(0, 0) = T(1);
  a(0, 4) = T(2);
  a(1, 2) = T(3);
  a(3, 1) = T(2);
  const auto r = svd(a);
  ASSERT_EQ(r.info, 0);
  expect_close<T>(r.s[0], 3.0, 100, "s1");
  EXPECT_LE(mpkit::abs(r.s[1] - mpkit::sqrt(T(5))), T(100) * eps<T>() * mpkit::sqrt(T(5)));
  expect_close<T>(r.s[2], 2.0, 100, "s3");
  EXPECT_LE(mpkit::abs(r.s[3]), T(100) * eps<T>() * T(3));
  expect_ratios<T>(testkit::residual_svd<T>(a, r.s, r.u, r.vt));
}

TYPED_TEST(Lapack, GesvdDiagonalAndRandom) {
  using T = TypeParam;
  const auto d = testkit::gen_matrix<T>({MatrixKind::diagonal, 4, 4, 0, {-2, 0.5, 7, -9}});
  const auto r = svd(d);
  ASSERT_EQ(r.info, 0);
  const double want[] = {9, 7, 2, 0.5};
  for (int i = 0; i < 4; ++i) expect_close<T>(r.s[static_cast<std::size_t>(i)], want[i], 10, "s");
  for (const auto& [m, n] : {std::pair<index_t, index_t>{1, 1}, {5, 3}, {3, 5}, {40, 40}, {13, 40}, {40, 27}}) {
    const auto a = random_matrix<T>(m, n, 600 + static_cast<std::uint64_t>(m * 100 + n));
    const auto s = svd(a);
    ASSERT_EQ(s.info, 0);
    EXPECT_TRUE(std::ranges::is_sorted(s.s, std::greater<>()));
    for (const T& v : s.s) EXPECT_GE(v, T(0));
    expect_ratios<T>(testkit::residual_svd<T>(a, s.s, s.u, s.vt));
  }
}

TYPED_TEST(Lapack, WorkspaceQueries) {
  using T = TypeParam;
  const index_t n = 4;
  auto a = random_matrix<T>(n, n, 700, MatrixKind::symmetric);
  const auto a0 = a;
  std::vector<T> w(n), probe(1);
  ASSERT_EQ(Rsyev<T>('V', 'U', n, a.span(), n, w, probe, -1), 0);
  EXPECT_GE(to_double(probe[0]), 3.0 * n - 1);
  EXPECT_EQ(a, a0);
  EXPECT_EQ(w, std::vector<T>(n));

  for (index_t m = 1; m <= 50; m += 7) {
    auto s = random_matrix<T>(m, m, 800 + static_cast<std::uint64_t>(m), MatrixKind::symmetric);
    std::vector<T> ws(static_cast<std::size_t>(m)), q(1);
    ASSERT_EQ(Rsyev<T>('V', 'L', m, s.span(), m, ws, q, -1), 0);
    std::vector<T> work(static_cast<std::size_t>(to_double(q[0])));
    EXPECT_EQ(Rsyev<T>('V', 'L', m, s.span(), m, ws, work, static_cast<index_t>(work.size())), 0);

    auto g = random_matrix<T>(m, m + 2, 900 + static_cast<std::uint64_t>(m));
    Matrix<T> u(m, m), vt(m + 2, m + 2);
    std::vector<T> sv(static_cast<std::size_t>(m));
    ASSERT_EQ(Rgesvd<T>('A', 'A', m, m + 2, g.span(), m, sv, u.span(), m, vt.span(), m + 2, q, -1), 0);
    std::vector<T> work2(static_cast<std::size_t>(to_double(q[0])));
    EXPECT_EQ(Rgesvd<T>('A', 'A', m, m + 2, g.span(), m, sv, u.span(), m, vt.span(), m + 2, work2,
                        static_cast<index_t>(work2.size())),
              0);
  }
}

TEST(LapackPrecision, HilbertEightAtDoubleDouble) {
  const auto row = testkit::hilbert_infnorm<dd_real>(8);
  EXPECT_EQ(row.info, 0);
  EXPECT_LE(row.infnorm, 1e-20);
}

TEST(LapackPrecision, AccuracyScalesWithEpsilon) {
  // Same generic code: the dd eigenvalues of the 4x4 instance are ~1e16 times
  // closer to the integers than the binary64 ones can be.
  const auto a = Matrix<dd_real>::from_rows({{5, 4, 1, 1}, {4, 5, 1, 1}, {1, 1, 4, 2}, {1, 1, 2, 4}});
  const auto r = eig_sym(a);
  ASSERT_EQ(r.info, 0);
  EXPECT_LE(to_double(mpkit::abs(r.w[3] - dd_real(10))), 1e-29);
}
