#include <gtest/gtest.h>

#include <sstream>

#include "mpkit/dd_io.hpp"
#include "mpkit/testkit.hpp"

using namespace mpkit;
using namespace mpkit::testkit;

TEST(Generators, Hilbert) {
  const auto h = gen_matrix<dd_real>({MatrixKind::hilbert, 2, 2, 0, {}});
  EXPECT_EQ(h(0, 0), dd_real(1));
  EXPECT_EQ(h(0, 1), dd_real("0.5"));
  EXPECT_EQ(h(1, 0), dd_real("0.5"));
  EXPECT_EQ(h(1, 1), dd_from_ratio(1, 3));
  const auto hf = gen_matrix<double>({MatrixKind::hilbert, 2, 2, 0, {}});
  EXPECT_EQ(hf(1, 1), 1.0 / 3.0);
}

TEST(Generators, Frank) {
  const auto f = gen_matrix<double>({MatrixKind::frank, 3, 3, 0, {}});
  EXPECT_EQ(f, Matrix<double>::from_rows({{3, 2, 1}, {2, 2, 1}, {0, 1, 1}}));
}

TEST(Generators, DeterministicAndBounded) {
  for (const auto kind : {MatrixKind::uniform, MatrixKind::symmetric, MatrixKind::spd}) {
    const MatrixGenSpec spec{kind, 6, 6, 1234, {}};
    const auto a = gen_matrix<double>(spec);
    EXPECT_EQ(a, gen_matrix<double>(spec)) << kind_name(kind);
    EXPECT_EQ(convert<dd_real>(a), gen_matrix<dd_real>(spec));
    EXPECT_FALSE(a == gen_matrix<double>({kind, 6, 6, 1235, {}}));
    if (kind != MatrixKind::uniform) {
      EXPECT_EQ(a, transpose(a));
    }
  }
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, -1.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(std::ldexp(u + 1.0, 52), std::trunc(std::ldexp(u + 1.0, 52)));
  }
  // SPD really is positive definite.
  auto s = gen_matrix<double>({MatrixKind::spd, 20, 20, 5, {}});
  EXPECT_EQ(Rpotrf<double>('L', 20, s.span(), 20), 0);
}

TEST(Generators, Errors) {
  EXPECT_THROW((void)gen_matrix<double>({MatrixKind::frank, 3, 4, 0, {}}), std::invalid_argument);
  EXPECT_THROW((void)gen_matrix<double>({MatrixKind::uniform, -1, 4, 0, {}}), std::invalid_argument);
  EXPECT_THROW((void)gen_matrix<double>({MatrixKind::diagonal, 2, 2, 0, {1}}), std::invalid_argument);
  EXPECT_THROW((void)parse_kind("toeplitz"), std::invalid_argument);
  EXPECT_EQ(parse_kind(kind_name(MatrixKind::spd)), MatrixKind::spd);
}

TEST(Residuals, IdentityFactorsGiveZero) {
  const auto eye = Matrix<dd_real>::identity(4);
  const std::vector<index_t> ipiv{1, 2, 3, 4};
  EXPECT_EQ(residual_lu(eye, eye, ipiv).ratio, 0.0);
  EXPECT_EQ(residual_chol(eye, eye, 'L').ratio, 0.0);
  EXPECT_EQ(residual_inverse(eye, eye).ratio, 0.0);
  const std::vector<dd_real> ones(4, dd_real(1));
  for (const auto& r : residual_eig<dd_real>(eye, ones, eye)) EXPECT_EQ(r.ratio, 0.0);
  for (const auto& r : residual_schur<dd_real>(eye, eye, eye)) EXPECT_EQ(r.ratio, 0.0);
  for (const auto& r : residual_svd<dd_real>(eye, ones, eye, eye)) EXPECT_EQ(r.ratio, 0.0);
  EXPECT_THROW((void)residual_chol(eye, Matrix<dd_real>::identity(3), 'L'), std::invalid_argument);
}

TEST(Residuals, DetectsWrongFactors) {
  const auto a = gen_matrix<dd_real>({MatrixKind::uniform, 5, 5, 3, {}});
  auto lu = lu_factor(a);
  lu.lu(2, 3) += dd_real(1e-20);
  EXPECT_FALSE(residual_lu(a, lu.lu, lu.ipiv).passed);
}

TEST(Residuals, WorkedSyevInstance) {
  const auto a = Matrix<dd_real>::from_rows({{5, 4, 1, 1}, {4, 5, 1, 1}, {1, 1, 4, 2}, {1, 1, 2, 4}});
  const auto r = eig_sym(a);
  for (const auto& rep : residual_eig<dd_real>(a, r.w, r.v)) {
    EXPECT_TRUE(rep.passed) << format_line(rep);
    EXPECT_LT(rep.ratio, kThreshold);
  }
}

TEST(Reports, CsvRoundTrip) {
  const std::vector<ResidualReport> in{make_report("Rgetrf lu", 5, 5, 1.25), make_report("Rsyev orth", 3, 3, 45.0),
                                       make_report("nan", 1, 1, std::nan(""))};
  EXPECT_TRUE(in[0].passed);
  EXPECT_FALSE(in[1].passed);
  EXPECT_TRUE(std::isinf(in[2].ratio));
  std::stringstream ss;
  write_csv(ss, in);
  const auto out = parse_csv(ss);
  ASSERT_EQ(out.size(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    EXPECT_EQ(out[i].name, in[i].name);
    EXPECT_EQ(out[i].m, in[i].m);
    EXPECT_EQ(out[i].passed, in[i].passed);
    EXPECT_DOUBLE_EQ(out[i].ratio, in[i].ratio);
  }
  std::stringstream bad("routine,m\n");
  EXPECT_THROW((void)parse_csv(bad), std::runtime_error);
  EXPECT_EQ(format_line(in[0]), "Rgetrf lu 5 5 1.250000e+00 3.000000e+01 PASS");
}

TEST(Oracle, RgemmAndRaxpy) {
  const auto r = compare_vs_oracle("Rgemm", {MatrixKind::uniform, 10, 10, 99, {}});
  EXPECT_TRUE(r.passed) << format_line(r);
  EXPECT_LT(r.ratio, 30.0);
  for (const auto& name : oracle_routines()) {
    const auto rep = compare_vs_oracle(name, {MatrixKind::uniform, 7, 6, 5, {}});
    EXPECT_TRUE(rep.passed) << format_line(rep);
  }
  EXPECT_THROW((void)compare_vs_oracle("Rfoo", {MatrixKind::uniform, 3, 3, 1, {}}), std::invalid_argument);
}

TEST(Oracle, RaxpyAlphaZeroMatchesExactly) {
  std::vector<double> x{0.5, -0.25}, y{1.0, 2.0};
  std::vector<dd_real> xd{dd_real(0.5), dd_real(-0.25)}, yd{dd_real(1.0), dd_real(2.0)};
  Raxpy<double>(2, 0.0, x, 1, y, 1);
  Raxpy<dd_real>(2, dd_real(0), xd, 1, yd, 1);
  double worst = 0;
  for (int i = 0; i < 2; ++i) worst = std::max(worst, std::fabs(to_double(yd[i]) - y[i]));
  EXPECT_EQ(worst, 0.0);
}

TEST(Oracle, ErrorParity) {
  for (const auto* name : {"Rgemm", "Rgemv", "Rger", "Rsymv", "Rsyr2", "Rtrmv", "Rsyrk", "Rtrsm"}) {
    const auto cases = error_parity(name);
    ASSERT_FALSE(cases.empty()) << name;
    for (const auto& c : cases) {
      EXPECT_EQ(c.f64_index, c.dd_index) << name << ": " << c.description;
      EXPECT_GT(c.f64_index, 0) << name << ": " << c.description;
    }
    EXPECT_EQ(cases.front().f64_index, 1) << name;
  }
}

TEST(Hilbert, Study) {
  const auto dd = hilbert_infnorm_study(8, Precision::double_double);
  const auto f64 = hilbert_infnorm_study(8, Precision::binary64);
  ASSERT_EQ(dd.size(), 8U);
  ASSERT_EQ(f64.size(), 8U);
  EXPECT_EQ(dd[0].infnorm, 0.0);
  EXPECT_EQ(f64[0].infnorm, 0.0);
  EXPECT_EQ(f64[1].infnorm, 0.0);
  EXPECT_LE(dd[7].infnorm, 1e-20);
  // Extra precision shows once the matrix is ill-conditioned.
  for (std::size_t i = 3; i < 8; ++i) EXPECT_LT(dd[i].infnorm, f64[i].infnorm * 1e-10) << i + 1;
  EXPECT_THROW((void)hilbert_infnorm_study(0, Precision::binary64), std::invalid_argument);
}

TEST(Qa, SmallRunPasses) {
  QaOptions opt;
  opt.seeds = 2;
  opt.sizes = {1, 3, 8};
  opt.nmax = 8;
  const auto reports = run_qa(opt);
  EXPECT_GT(reports.size(), 100U);
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << format_line(r);
  opt.routine = "Rgesvd";
  for (const auto& r : run_qa(opt)) EXPECT_EQ(r.name.rfind("Rgesvd", 0), 0U) << r.name;
}
