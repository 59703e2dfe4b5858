// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only
// if none failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mpkit/bench.hpp"
#include "mpkit/dd_io.hpp"
#include "mpkit/mpblas_par.hpp"
#include "mpkit/testkit.hpp"
#include "support.hpp"

using namespace mpkit;
using mpkit::test::Big;
using mpkit::test::Rational;

namespace {

enum class Verdict { pass, fail, skip };

struct Result {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct Notes {
  bool ok = true;
  std::ostringstream text;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      text << " [" << what << "]";
    }
  }
  Result result(const std::string& summary) const {
    return {ok ? Verdict::pass : Verdict::fail, summary + text.str()};
  }
};

std::string sci(double x, int digits = 3) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return buf;
}

using DdMat = Matrix<dd_real>;
const dd_real kEpsDd = Rlamch<dd_real>('E');

// --------------------------------------------------------------- 1

Result rlamch_fidelity() {
  struct Row {
    char key;
    const char* value;
  };
  // Tables "Rlamch values for double" and "Rlamch values for dd_real".
  const Row f64[] = {{'E', "+1.1102230246251565e-16"},  {'S', "+2.2250738585072014e-308"},
                     {'B', "+2.0000000000000000e+00"},  {'P', "+2.2204460492503131e-16"},
                     {'N', "+5.3000000000000000e+01"},  {'R', "+1.0000000000000000e+00"},
                     {'M', "-1.0210000000000000e+03"},  {'U', "+2.2250738585072014e-308"},
                     {'L', "+1.0240000000000000e+03"},  {'O', "+1.7976931348623157e+308"},
                     {'-', "+4.4942328371557898e+307"}};
  const Row dd[] = {{'E', "+4.93038065763131995214781514484568e-32"},
                    {'S', "+2.00416836000897277799610805134985e-292"},
                    {'B', "+2.00000000000000000000000000000000e+00"},
                    {'P', "+9.86076131526263990429563028969136e-32"},
                    {'N', "+1.06000000000000000000000000000000e+02"},
                    {'R', "+1.00000000000000000000000000000000e+00"},
                    {'M', "-9.68000000000000000000000000000001e+02"},
                    {'U', "+2.00416836000897277799610805134985e-292"},
                    {'L', "+1.02400000000000000000000000000000e+03"},
                    {'O', "+1.79769313486231580793728971405328e+308"},
                    {'-', "+4.98960077383679952914093178259285e+291"}};
  Notes n;
  int matched = 0;
  auto compare = [&](Precision p, const Row* rows, std::size_t count) {
    const auto table = rlamch_table(p);
    n.check(table.size() == count, "row count");
    for (std::size_t i = 0; i < count && i < table.size(); ++i) {
      const bool ok = table[i].key == rows[i].key && table[i].value == rows[i].value;
      n.check(ok, std::string(precision_name(p)) + " " + rows[i].key + ": " + table[i].value);
      matched += ok ? 1 : 0;
    }
  };
  compare(Precision::binary64, f64, std::size(f64));
  compare(Precision::double_double, dd, std::size(dd));
  return n.result(std::to_string(matched) + "/22 rows digit-for-digit");
}

// --------------------------------------------------------------- 2

Result rgemm_instance() {
  const DdMat a = DdMat::from_rows({{1, 8, 3}, {0, 10, 8}, {9, -5, -1}});
  const DdMat b = DdMat::from_rows({{9, 8, 3}, {3, -11, 0}, {-8, 6, 1}});
  DdMat c = DdMat::from_rows({{3, 3, 0}, {8, 4, 8}, {6, 1, -2}});
  const DdMat want = DdMat::from_rows({{21, -192, 18}, {-118, -194, 8}, {210, 361, 82}});
  const auto st = Rgemm<dd_real>('N', 'N', 3, 3, 3, dd_real(3), a.span(), 3, b.span(), 3, dd_real(-2), c.span(), 3);
  Notes n;
  n.check(!st, "status");
  int exact = 0;
  for (index_t j = 0; j < 3; ++j)
    for (index_t i = 0; i < 3; ++i) {
      const bool ok = c(i, j) == want(i, j);
      exact += ok ? 1 : 0;
      n.check(ok, "C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return n.result(std::to_string(exact) + "/9 entries exact");
}

// --------------------------------------------------------------- 3

Rational decimal(const std::string& s) {
  // Exact value of a short decimal literal.
  const auto dot = s.find('.');
  std::string digits = s;
  int scale = 0;
  if (dot != std::string::npos) {
    scale = static_cast<int>(s.size() - dot - 1);
    digits.erase(dot, 1);
  }
  boost::multiprecision::cpp_int num(digits);
  boost::multiprecision::cpp_int den = 1;
  for (int i = 0; i < scale; ++i) den *= 10;
  return Rational(num, den);
}

Result cgemm_instance() {
  using Cell = std::pair<const char*, const char*>;
  const Cell a[3][3] = {{{"1", "-1"}, {"8", "2.2"}, {"0", "-10"}},
                        {{"2", "0"}, {"10", "0"}, {"8.1", "2.2"}},
                        {{"-9", "3"}, {"-5", "3"}, {"-1", "0"}}};
  const Cell b[3][3] = {{{"9", "0"}, {"8", "-0.01"}, {"3", "1.001"}},
                        {{"3", "-8"}, {"-11", "0.1"}, {"8", "0.00001"}},
                        {{"-8", "1"}, {"6", "0"}, {"1.1", "1.0"}}};
  const Cell c[3][3] = {{{"3", "1"}, {"-3", "9.99"}, {"-9", "-11"}},
                        {{"8", "-1"}, {"4", "4.44"}, {"8", "9"}},
                        {{"6", "0"}, {"-1", "0"}, {"-2", "1"}}};
  const Cell alpha{"3", "-1.2"};
  const Cell beta{"-2", "-2"};
  // Printed 3-decimal answer.
  const double printed[3][3][2] = {{{194.120, -39.920}, {-324.402, -191.934}, {235.524, -39.798}},
                                   {{-182.400, -259.700}, {-118.304, 80.140}, {295.157, -107.686}},
                                   {{-114.000, 289.800}, {-79.102, 1.694}, {-179.720, 156.296}}};

  auto dd = [](const Cell& x) { return dd_complex(dd_from_string(x.first), dd_from_string(x.second)); };
  Matrix<dd_complex> ma(3, 3), mb(3, 3), mc(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ma(i, j) = dd(a[i][j]);
      mb(i, j) = dd(b[i][j]);
      mc(i, j) = dd(c[i][j]);
    }
  const auto st =
      Cgemm<dd_complex>('N', 'N', 3, 3, 3, dd(alpha), ma.span(), 3, mb.span(), 3, dd(beta), mc.span(), 3);

  // Exact answer in rational arithmetic.
  struct Cx {
    Rational re, im;
  };
  auto q = [](const Cell& x) { return Cx{decimal(x.first), decimal(x.second)}; };
  auto mul = [](const Cx& x, const Cx& y) { return Cx{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; };
  Notes n;
  n.check(!st, "status");
  Rational worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Cx s{0, 0};
      for (int k = 0; k < 3; ++k) {
        const Cx p = mul(q(a[i][k]), q(b[k][j]));
        s.re += p.re;
        s.im += p.im;
      }
      const Cx as = mul(q(alpha), s);
      const Cx bc = mul(q(beta), q(c[i][j]));
      const Cx want{as.re + bc.re, as.im + bc.im};
      const Rational dre = abs(test::exact(mc(i, j).real()) - want.re);
      const Rational dim = abs(test::exact(mc(i, j).imag()) - want.im);
      worst = std::max({worst, dre, dim});
      const Rational tol = Rational(1, boost::multiprecision::pow(boost::multiprecision::cpp_int(10), 28));
      n.check(dre <= tol && dim <= tol, "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      // The printed answer is the exact one rounded to 3 decimals.
      const bool printed_ok = std::fabs(static_cast<double>(want.re) - printed[i][j][0]) <= 5e-4 + 1e-12 &&
                              std::fabs(static_cast<double>(want.im) - printed[i][j][1]) <= 5e-4 + 1e-12;
      n.check(printed_ok, "printed value mismatch at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return n.result("max |error| vs exact decimal answer " + sci(static_cast<double>(worst)));
}

// --------------------------------------------------------------- 4-6

void ratios(Notes& n, const std::vector<testkit::ResidualReport>& reps, double& worst) {
  for (const auto& r : reps) {
    worst = std::max(worst, r.ratio);
    n.check(r.passed, r.name + " " + sci(r.ratio));
  }
}

Result rsyev_instance() {
  const DdMat a = DdMat::from_rows({{5, 4, 1, 1}, {4, 5, 1, 1}, {1, 1, 4, 2}, {1, 1, 2, 4}});
  const auto r = eig_sym(a);
  Notes n;
  n.check(r.info == 0, "info");
  if (r.info != 0) return n.result("Rsyev failed");
  const double want[] = {1, 2, 5, 10};
  double worst_rel = 0;
  for (int i = 0; i < 4; ++i) {
    const double rel = to_double(abs(r.w[static_cast<std::size_t>(i)] - dd_real(want[i])) / dd_real(want[i]) / kEpsDd);
    worst_rel = std::max(worst_rel, rel);
    n.check(rel <= 100, "w" + std::to_string(i + 1));
  }
  double worst = 0;
  ratios(n, testkit::residual_eig<dd_real>(a, r.w, r.v, "Rsyev"), worst);
  return n.result("max eigenvalue error " + sci(worst_rel) + " eps, max ratio " + sci(worst));
}

Result rgees_instance() {
  Notes n;
  double worst_err = 0;
  double worst = 0;
  auto run = [&](const DdMat& a, std::vector<std::pair<double, double>> want, bool check_resid) {
    const auto r = schur(a);
    n.check(r.info == 0, "info");
    if (r.info != 0) return;
    for (std::size_t i = 0; i < r.wr.size(); ++i) {
      std::size_t best = 0;
      double best_err = 1e300;
      for (std::size_t k = 0; k < want.size(); ++k) {
        const double err = to_double(max(abs(r.wr[i] - dd_real(want[k].first)), abs(r.wi[i] - dd_real(want[k].second))));
        if (err < best_err) {
          best_err = err;
          best = k;
        }
      }
      const double mag = std::hypot(want[best].first, want[best].second);
      const double rel = best_err / (mag * to_double(kEpsDd));
      worst_err = std::max(worst_err, rel);
      n.check(rel <= 100, "eigenvalue " + sci(to_double(r.wr[i])) + "," + sci(to_double(r.wi[i])));
      want.erase(want.begin() + static_cast<std::ptrdiff_t>(best));
    }
    if (check_resid) ratios(n, testkit::residual_schur<dd_real>(a, r.t, r.z, "Rgees"), worst);
  };
  run(DdMat::from_rows({{-2, 2, 2, 2}, {-3, 3, 2, 2}, {-2, 0, 4, 2}, {-1, 0, 0, 5}}), {{1, 0}, {2, 0}, {3, 0}, {4, 0}},
      true);
  run(DdMat::from_rows({{4, -5, 0, 3}, {0, 4, -3, -5}, {5, -3, 4, 0}, {3, 0, 5, 4}}), {{12, 0}, {1, 5}, {1, -5}, {2, 0}},
      false);
  return n.result("max eigenvalue error " + sci(worst_err) + " eps (relative), max ratio " + sci(worst));
}

Result rgesvd_instance() {
  const DdMat a = DdMat::from_rows({{1, 0, 0, 0, 2}, {0, 0, 3, 0, 0}, {0, 0, 0, 0, 0}, {0, 2, 0, 0, 0}});
  const auto r = svd(a);
  Notes n;
  n.check(r.info == 0, "info");
  if (r.info != 0) return n.result("Rgesvd failed");
  // sqrt(5) from the 256-bit oracle, rounded to the nearest dd.
  const Big s5 = boost::multiprecision::sqrt(Big(5));
  const double s5hi = static_cast<double>(s5);
  const dd_real sqrt5 = dd_real::from_sum(s5hi, static_cast<double>(s5 - Big(s5hi)));
  const dd_real want[] = {dd_real(3), sqrt5, dd_real(2)};
  double worst_rel = 0;
  for (int i = 0; i < 3; ++i) {
    const double rel = to_double(abs(r.s[static_cast<std::size_t>(i)] - want[i]) / want[i] / kEpsDd);
    worst_rel = std::max(worst_rel, rel);
    n.check(rel <= 100, "s" + std::to_string(i + 1));
  }
  const double anorm = 3.0;  // ||A||_2
  const double zero_err = std::fabs(to_double(r.s[3])) / (anorm * to_double(kEpsDd));
  n.check(zero_err <= 100, "s4 " + sci(to_double(r.s[3])));
  double worst = 0;
  ratios(n, testkit::residual_svd<dd_real>(a, r.s, r.u, r.vt, "Rgesvd"), worst);
  return n.result("max singular value error " + sci(worst_rel) + " eps, |s4| " + sci(zero_err) +
                  " eps*||A||, max ratio " + sci(worst));
}

// --------------------------------------------------------------- 7

Result hilbert_study() {
  const auto dd = testkit::hilbert_infnorm_study(8, Precision::double_double);
  const auto f64 = testkit::hilbert_infnorm_study(8, Precision::binary64);
  Notes n;
  std::ostringstream table;
  for (std::size_t i = 0; i < dd.size(); ++i) {
    const index_t order = dd[i].n;
    table << " n=" << order << ":" << sci(dd[i].infnorm, 2) << "/" << sci(f64[i].infnorm, 2);
    n.check(dd[i].info == 0, "dd info n=" + std::to_string(order));
    if (order <= 2) {
      n.check(dd[i].infnorm == 0.0, "dd n=" + std::to_string(order) + " not exactly 0");
    } else {
      n.check(dd[i].infnorm < 1e-20, "dd n=" + std::to_string(order) + " >= 1e-20");
    }
  }
  n.check(f64[7].infnorm > 1e-13, "f64 n=8 <= 1e-13");
  return n.result("InfnormL dd/f64:" + table.str());
}

// --------------------------------------------------------------- 8

Result residual_suite() {
  testkit::QaOptions opt;  // 20 seeds, sizes {1,2,3,5,10,50}
  const auto reports = testkit::run_qa(opt);
  Notes n;
  std::size_t failed = 0;
  double worst = 0;
  std::string worst_name;
  for (const auto& r : reports) {
    if (!r.passed) {
      ++failed;
      if (failed <= 3) n.check(false, r.name + " " + sci(r.ratio));
    }
    if (r.ratio > worst) {
      worst = r.ratio;
      worst_name = r.name;
    }
  }
  n.check(!reports.empty(), "no reports");
  return n.result(std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
                  " ratios < 30, max " + sci(worst) + " (" + worst_name + ")");
}

// --------------------------------------------------------------- 9

Result eft_and_dd_oracle() {
  Notes n;
  constexpr int kCases = 100000;
  // Error-free transforms against exact rationals.
  test::DoubleGen gen(0x9e3779b97f4a7c15ULL, -200, 200);
  int eft_bad = 0;
  for (int i = 0; i < kCases; ++i) {
    const double a = gen();
    // Every fourth pair shares a's binade, to exercise cancellation.
    const double b = (i % 4 == 0) ? -a * (1.0 + std::ldexp(static_cast<double>(i % 1000), -40)) : gen();
    const auto s = eft::two_sum(a, b);
    const auto p = eft::two_prod(a, b);
    const auto pd = eft::two_prod_dekker(a, b);
    const Rational ra = test::exact(a);
    const Rational rb = test::exact(b);
    const bool ok = s.r == a + b && test::exact(s.r) + test::exact(s.e) == ra + rb && p.r == a * b &&
                    test::exact(p.r) + test::exact(p.e) == ra * rb && pd.r == p.r && pd.e == p.e;
    eft_bad += ok ? 0 : 1;
  }
  n.check(eft_bad == 0, std::to_string(eft_bad) + " inexact EFT cases");

  // dd arithmetic against a 256-bit oracle.
  test::DoubleGen dgen(0x243f6a8885a308d3ULL, -60, 60);
  const Big bound = boost::multiprecision::ldexp(Big(1), -99);
  Big worst = 0;
  int dd_bad = 0;
  for (int i = 0; i < kCases; ++i) {
    const dd_real a = dgen.dd();
    const dd_real b = dgen.dd();
    const Big ba = test::big(a);
    const Big bb = test::big(b);
    dd_real got;
    Big want;
    switch (i % 5) {
      case 0: got = a + b; want = ba + bb; break;
      case 1: got = a - b; want = ba - bb; break;
      case 2: got = a * b; want = ba * bb; break;
      case 3: got = a / b; want = ba / bb; break;
      default: got = sqrt(abs(a)); want = boost::multiprecision::sqrt(abs(ba)); break;
    }
    if (want == 0) {
      dd_bad += got == dd_real(0) ? 0 : 1;
      continue;
    }
    const Big rel = abs((test::big(got) - want) / want);
    if (rel > worst) worst = rel;
    dd_bad += rel <= bound ? 0 : 1;
  }
  n.check(dd_bad == 0, std::to_string(dd_bad) + " dd cases above 2^-99");
  const int worst_log2 =
      worst == 0 ? -1000 : static_cast<int>(std::floor(static_cast<double>(boost::multiprecision::log2(worst))));
  return n.result(std::to_string(kCases) + " EFT pairs exact; " + std::to_string(kCases) +
                  " dd cases, max relative error < 2^" + std::to_string(worst_log2 + 1));
}

// --------------------------------------------------------------- 10

Result determinism() {
  Notes n;
  int mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto a = testkit::gen_matrix<dd_real>({testkit::MatrixKind::uniform, 64, 64, seed, {}});
    const auto b = testkit::gen_matrix<dd_real>({testkit::MatrixKind::uniform, 64, 64, seed + 1000, {}});
    const auto c0 = testkit::gen_matrix<dd_real>({testkit::MatrixKind::uniform, 64, 64, seed + 2000, {}});
    const auto xv = testkit::random_vector(100000, seed + 3000);
    const auto yv = testkit::random_vector(100000, seed + 4000);
    const std::vector<dd_real> x(xv.begin(), xv.end());
    const std::vector<dd_real> y(yv.begin(), yv.end());
    const dd_real alpha(0.75), beta(-1.25);

    DdMat cs = c0;
    (void)Rgemm<dd_real>('N', 'N', 64, 64, 64, alpha, a.span(), 64, b.span(), 64, beta, cs.span(), 64);
    const dd_real ds = Rdot<dd_real>(100000, x, 1, y, 1);
    std::vector<dd_real> ys = y;
    Raxpy<dd_real>(100000, alpha, x, 1, ys, 1);

    for (const int t : {1, 2, 4, 8}) {
      DdMat cp = c0;
      (void)Rgemm_par<dd_real>('N', 'N', 64, 64, 64, alpha, a.span(), 64, b.span(), 64, beta, cp.span(), 64, t);
      const dd_real dp = Rdot_par<dd_real>(100000, x, 1, y, 1, t);
      std::vector<dd_real> yp = y;
      Raxpy_par<dd_real>(100000, alpha, x, 1, yp, 1, t);
      auto same = [](const dd_real& u, const dd_real& v) { return u.hi() == v.hi() && u.lo() == v.lo(); };
      bool ok = same(dp, ds);
      for (std::size_t i = 0; ok && i < cs.span().size(); ++i) ok = same(cs.span()[i], cp.span()[i]);
      for (std::size_t i = 0; ok && i < ys.size(); ++i) ok = same(ys[i], yp[i]);
      if (!ok) {
        ++mismatches;
        n.check(false, "seed " + std::to_string(seed) + " t=" + std::to_string(t));
      }
    }
  }
  return n.result("50 seeds x t in {1,2,4,8}: " + std::to_string(mismatches) + " mismatches");
}

// --------------------------------------------------------------- 11

Result bench_methodology() {
  Notes n;
  std::ostringstream detail;
  // (a) well-formed CSV whose columns are arithmetically consistent.
  std::vector<bench::BenchRecord> all;
  std::size_t expected_rows = 0;
  for (const auto& routine : bench::bench_routines())
    for (const auto p : {Precision::binary64, Precision::double_double}) {
      bench::BenchOptions opt;
      opt.routine = routine;
      opt.precision = p;
      opt.sizes = (routine == "Raxpy" || routine == "Rdot") ? bench::sweep(1000, 3000, 1000) : bench::sweep(8, 24, 8);
      opt.repetitions = 2;
      const auto recs = bench::run_bench(opt);
      expected_rows += opt.sizes.size();
      all.insert(all.end(), recs.begin(), recs.end());
    }
  std::stringstream csv;
  bench::emit_csv(csv, all);
  const auto back = bench::parse_csv(csv);
  bool a_ok = back.size() == expected_rows;
  for (const auto& r : back) {
    const double flops = bench::flop_count(r.routine, r.n, r.k);
    a_ok = a_ok && r.elapsed_s > 0 && std::fabs(r.mflops * r.elapsed_s * 1e6 - flops) <= 1e-9 * flops;
  }
  n.check(a_ok, "(a) csv");
  detail << "(a) " << back.size() << " rows consistent";

  // (b) parallel speedup, only meaningful with at least 4 cores.
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw >= 4) {
    bench::BenchOptions opt;
    opt.routine = "Rgemm";
    opt.precision = Precision::double_double;
    opt.sizes = {1024};
    opt.threads = 1;
    const double t1 = bench::run_bench(opt).front().elapsed_s;
    opt.threads = 4;
    const double t4 = bench::run_bench(opt).front().elapsed_s;
    n.check(t1 / t4 >= 2.0, "(b) speedup " + sci(t1 / t4));
    detail << "; (b) speedup(4)/speedup(1) = " << sci(t1 / t4);
  } else {
    detail << "; (b) SKIP: " << hw << " hardware thread(s), needs >= 4";
  }

  // (c) dd vs binary64 Rgemm rate at n = 512.
  bench::BenchOptions opt;
  opt.routine = "Rgemm";
  opt.sizes = {512};
  opt.threads = 1;
  opt.precision = Precision::binary64;
  const double f64 = bench::run_bench(opt).front().mflops;
  opt.precision = Precision::double_double;
  const double dd = bench::run_bench(opt).front().mflops;
  const double gap = f64 / dd;
  n.check(gap >= 2.0 && gap <= 60.0, "(c) gap " + sci(gap));
  detail << "; (c) f64 " << sci(f64) << " MFlops, dd " << sci(dd) << " MFlops, gap " << sci(gap) << "x";
  return n.result(detail.str());
}

// --------------------------------------------------------------- 12

Result workspace_query() {
  Notes n;
  int calls = 0;
  auto check = [&](const std::string& what, index_t query_info, index_t size, index_t info, index_t short_info) {
    ++calls;
    n.check(query_info == 0 && size >= 1 && info == 0 && short_info < 0, what);
  };
  for (index_t nn = 1; nn <= 50; ++nn) {
    const std::uint64_t seed = 0xC0FFEE + static_cast<std::uint64_t>(nn);
    const auto a = testkit::gen_matrix<dd_real>({testkit::MatrixKind::uniform, nn, nn, seed, {}});
    std::vector<dd_real> probe(1);
    // Rgetri
    {
      DdMat f = a;
      std::vector<index_t> ipiv(static_cast<std::size_t>(nn));
      (void)Rgetrf<dd_real>(nn, nn, f.span(), nn, ipiv);
      const index_t qi = Rgetri<dd_real>(nn, f.span(), nn, ipiv, probe, -1);
      const auto size = static_cast<index_t>(to_double(probe[0]));
      DdMat g = f;
      std::vector<dd_real> work(static_cast<std::size_t>(size));
      const index_t info = Rgetri<dd_real>(nn, g.span(), nn, ipiv, work, size);
      DdMat h = f;
      const index_t short_info = Rgetri<dd_real>(nn, h.span(), nn, ipiv, work, size - 1);
      check("Rgetri n=" + std::to_string(nn), qi, size, info, short_info);
    }
    // Rsyev
    {
      const auto s = testkit::gen_matrix<dd_real>({testkit::MatrixKind::symmetric, nn, nn, seed, {}});
      std::vector<dd_real> w(static_cast<std::size_t>(nn));
      for (const char jobz : {'N', 'V'}) {
        DdMat f = s;
        const index_t qi = Rsyev<dd_real>(jobz, 'U', nn, f.span(), nn, w, probe, -1);
        const auto size = static_cast<index_t>(to_double(probe[0]));
        std::vector<dd_real> work(static_cast<std::size_t>(size));
        const index_t info = Rsyev<dd_real>(jobz, 'U', nn, f.span(), nn, w, work, size);
        DdMat g = s;
        const index_t short_info = Rsyev<dd_real>(jobz, 'U', nn, g.span(), nn, w, work, size - 1);
        check(std::string("Rsyev ") + jobz + " n=" + std::to_string(nn), qi, size, info, short_info);
      }
    }
    // Rgees
    {
      std::vector<dd_real> wr(static_cast<std::size_t>(nn)), wi(static_cast<std::size_t>(nn));
      for (const char jobvs : {'N', 'V'}) {
        DdMat f = a;
        DdMat z(nn, nn);
        const index_t qi = Rgees<dd_real>(jobvs, nn, f.span(), nn, wr, wi, z.span(), nn, probe, -1);
        const auto size = static_cast<index_t>(to_double(probe[0]));
        std::vector<dd_real> work(static_cast<std::size_t>(size));
        const index_t info = Rgees<dd_real>(jobvs, nn, f.span(), nn, wr, wi, z.span(), nn, work, size);
        DdMat g = a;
        const index_t short_info = Rgees<dd_real>(jobvs, nn, g.span(), nn, wr, wi, z.span(), nn, work, size - 1);
        check(std::string("Rgees ") + jobvs + " n=" + std::to_string(nn), qi, size, info, short_info);
      }
    }
    // Rgesvd, square plus one tall and one wide shape
    for (const auto& [m, cols] : {std::pair{nn, nn}, std::pair{nn, nn / 2 + 1}, std::pair{nn / 2 + 1, nn}}) {
      const auto r = testkit::gen_matrix<dd_real>({testkit::MatrixKind::uniform, m, cols, seed, {}});
      std::vector<dd_real> s(static_cast<std::size_t>(std::min(m, cols)));
      DdMat u(m, m), vt(cols, cols);
      for (const char job : {'N', 'A'}) {
        DdMat f = r;
        const index_t qi = Rgesvd<dd_real>(job, job, m, cols, f.span(), m, s, u.span(), m, vt.span(), cols, probe, -1);
        const auto size = static_cast<index_t>(to_double(probe[0]));
        std::vector<dd_real> work(static_cast<std::size_t>(size));
        const index_t info = Rgesvd<dd_real>(job, job, m, cols, f.span(), m, s, u.span(), m, vt.span(), cols, work, size);
        DdMat g = r;
        const index_t short_info =
            Rgesvd<dd_real>(job, job, m, cols, g.span(), m, s, u.span(), m, vt.span(), cols, work, size - 1);
        check(std::string("Rgesvd ") + job + " " + std::to_string(m) + "x" + std::to_string(cols), qi, size, info,
              short_info);
      }
    }
  }
  return n.result(std::to_string(calls) + " query-then-call cases (Rgetri, Rsyev, Rgees, Rgesvd; n = 1..50)");
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0: no runtime bound
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Rlamch fidelity", 1, rlamch_fidelity},
      {2, "Rgemm worked instance", 1, rgemm_instance},
      {3, "Cgemm worked instance", 1, cgemm_instance},
      {4, "Rsyev worked instance", 0, rsyev_instance},
      {5, "Rgees worked instances", 0, rgees_instance},
      {6, "Rgesvd worked instance", 0, rgesvd_instance},
      {7, "Hilbert study", 5, hilbert_study},
      {8, "Random residual suite", 600, residual_suite},
      {9, "Error-free transform and dd oracle", 60, eft_and_dd_oracle},
      {10, "Parallel determinism", 0, determinism},
      {11, "Benchmark methodology", 0, bench_methodology},
      {12, "Workspace query", 0, workspace_query},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {Verdict::fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s && r.verdict == Verdict::pass) {
      r.verdict = Verdict::fail;
      r.detail += " [runtime " + sci(secs) + " s over budget]";
    }
    const char* tag = r.verdict == Verdict::pass ? "PASS" : (r.verdict == Verdict::skip ? "SKIP" : "FAIL");
    failed += r.verdict == Verdict::fail ? 1 : 0;
    std::printf("%s criterion %d (%s): %s (%.2f s)\n", tag, c.id, c.title, r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
