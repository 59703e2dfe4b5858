#include <functional>
#include <map>
#include <ostream>

#include "mpkit/cli.hpp"
#include "mpkit/dd_io.hpp"
#include "mpkit/testkit.hpp"

namespace mpkit::cli {

namespace {

using DdMat = Matrix<dd_real>;

/// Collects mismatches; the demo fails if any were recorded.
struct Checker {
  std::ostream& out;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    out << "MISMATCH " << what << '\n';
  }
  void close(const dd_real& got, const dd_real& want, const dd_real& tol, const std::string& what) {
    const dd_real err = abs(got - want);
    expect(err <= tol, what + ": got " + dd_to_string(got, 34) + " want " + dd_to_string(want, 34) +
                           " |err| " + dd_to_string(err, 3) + " > " + dd_to_string(tol, 3));
  }
  void ratios(const std::vector<testkit::ResidualReport>& reps) {
    for (const auto& r : reps) {
      out << "# " << testkit::format_line(r) << '\n';
      expect(r.passed, r.name + " ratio " + std::to_string(r.ratio));
    }
  }
  int status() const { return failures == 0 ? 0 : 1; }
};

dd_real eps_dd() { return Rlamch<dd_real>('E'); }

int demo_rgemm(std::ostream& out, int digits) {
  const DdMat a = DdMat::from_rows({{1, 8, 3}, {0, 10, 8}, {9, -5, -1}});
  const DdMat b = DdMat::from_rows({{9, 8, 3}, {3, -11, 0}, {-8, 6, 1}});
  DdMat c = DdMat::from_rows({{3, 3, 0}, {8, 4, 8}, {6, 1, -2}});
  const dd_real alpha(3);
  const dd_real beta(-2);
  out << "# Rgemm demo...\n";
  out << "A =" << print_octave(a, digits) << '\n';
  out << "B =" << print_octave(b, digits) << '\n';
  out << "C =" << print_octave(c, digits) << '\n';
  (void)Rgemm<dd_real>('N', 'N', 3, 3, 3, alpha, a.span(), 3, b.span(), 3, beta, c.span(), 3);
  out << "alpha = " << format_number(alpha, digits) << '\n';
  out << "beta  = " << format_number(beta, digits) << '\n';
  out << "ans =" << print_octave(c, digits) << '\n';
  out << "#please check by Matlab or Octave following and ans above\n";
  out << "alpha * A * B + beta * C\n";
  const DdMat want = DdMat::from_rows({{21, -192, 18}, {-118, -194, 8}, {210, 361, 82}});
  Checker chk{out};
  for (index_t i = 0; i < 3; ++i)
    for (index_t j = 0; j < 3; ++j)
      chk.close(c(i, j), want(i, j), dd_real(0), "C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return chk.status();
}

Matrix<dd_complex> cmat(const std::vector<std::vector<std::pair<const char*, const char*>>>& rows) {
  Matrix<dd_complex> m(static_cast<index_t>(rows.size()), static_cast<index_t>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<index_t>(i), static_cast<index_t>(j)) =
          dd_complex(dd_from_string(rows[i][j].first), dd_from_string(rows[i][j].second));
  return m;
}

int demo_cgemm(std::ostream& out, int digits) {
  const auto a = cmat({{{"1", "-1"}, {"8", "2.2"}, {"0", "-10"}},
                       {{"2", "0"}, {"10", "0"}, {"8.1", "2.2"}},
                       {{"-9", "3"}, {"-5", "3"}, {"-1", "0"}}});
  const auto b = cmat({{{"9", "0"}, {"8", "-0.01"}, {"3", "1.001"}},
                       {{"3", "-8"}, {"-11", "0.1"}, {"8", "0.00001"}},
                       {{"-8", "1"}, {"6", "0"}, {"1.1", "1.0"}}});
  auto c = cmat({{{"3", "1"}, {"-3", "9.99"}, {"-9", "-11"}},
                 {{"8", "-1"}, {"4", "4.44"}, {"8", "9"}},
                 {{"6", "0"}, {"-1", "0"}, {"-2", "1"}}});
  const dd_complex alpha(dd_real(3), dd_from_string("-1.2"));
  const dd_complex beta(dd_real(-2), dd_real(-2));
  out << "# Cgemm demo...\n";
  out << "a =" << print_octave(a, digits) << '\n';
  out << "b =" << print_octave(b, digits) << '\n';
  out << "c =" << print_octave(c, digits) << '\n';
  (void)Cgemm<dd_complex>('N', 'N', 3, 3, 3, alpha, a.span(), 3, b.span(), 3, beta, c.span(), 3);
  out << "alpha = " << format_number(alpha.real(), digits) << format_number(alpha.imag(), digits) << "i\n";
  out << "beta = " << format_number(beta.real(), digits) << format_number(beta.imag(), digits) << "i\n";
  out << "ans =" << print_octave(c, digits) << '\n';
  out << "#please check by Matlab or Octave following and ans above\n";
  out << "alpha * a * b + beta * c\n";
  // alpha*a*b + beta*c in exact decimal arithmetic.
  const auto want = cmat({{{"194.12", "-39.92"}, {"-324.402", "-191.934"}, {"235.52423", "-39.7979336"}},
                          {{"-182.4", "-259.7"}, {"-118.304", "80.14"}, {"295.15652", "-107.6857"}},
                          {{"-114", "289.8"}, {"-79.102", "1.694"}, {"-179.71995", "156.296486"}}});
  Checker chk{out};
  const dd_real tol("1e-28");
  for (index_t i = 0; i < 3; ++i)
    for (index_t j = 0; j < 3; ++j) {
      const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      chk.close(c(i, j).real(), want(i, j).real(), tol, "re c" + at);
      chk.close(c(i, j).imag(), want(i, j).imag(), tol, "im c" + at);
    }
  return chk.status();
}

int demo_rsyev(std::ostream& out, int digits) {
  const DdMat a = DdMat::from_rows({{5, 4, 1, 1}, {4, 5, 1, 1}, {1, 1, 4, 2}, {1, 1, 2, 4}});
  out << "# Rsyev demo...\n";
  out << "a =" << print_octave(a, digits) << '\n';
  const auto r = eig_sym(a);
  out << "w =" << print_octave(r.w, digits) << '\n';
  out << "Z =" << print_octave(r.v, digits) << '\n';
  out << "#eig(a)\n";
  Checker chk{out};
  chk.expect(r.info == 0, "info " + std::to_string(r.info));
  if (r.info != 0) return chk.status();
  const double want[] = {1, 2, 5, 10};
  for (int i = 0; i < 4; ++i)
    chk.close(r.w[static_cast<std::size_t>(i)], dd_real(want[i]), dd_real(100) * eps_dd() * dd_real(want[i]),
              "w(" + std::to_string(i + 1) + ")");
  chk.ratios(testkit::residual_eig<dd_real>(a, r.w, r.v, "Rsyev"));
  return chk.status();
}

/// Matches computed eigenvalues to the expected list (order-free).
void match_eigs(Checker& chk, const SchurResult<dd_real>& r, std::vector<std::pair<double, double>> want) {
  const dd_real tol = dd_real(100) * eps_dd();
  for (std::size_t i = 0; i < r.wr.size(); ++i) {
    std::size_t best = want.size();
    dd_real best_err(0);
    for (std::size_t k = 0; k < want.size(); ++k) {
      const dd_real err = max(abs(r.wr[i] - dd_real(want[k].first)), abs(r.wi[i] - dd_real(want[k].second)));
      if (best == want.size() || err < best_err) {
        best = k;
        best_err = err;
      }
    }
    const dd_real scale = max(dd_real(1), dd_real(std::hypot(want[best].first, want[best].second)));
    chk.expect(best_err <= tol * scale, "eigenvalue " + dd_to_string(r.wr[i], 34) + " " + dd_to_string(r.wi[i], 34) +
                                            "i off by " + dd_to_string(best_err, 3));
    want.erase(want.begin() + static_cast<std::ptrdiff_t>(best));
  }
}

int schur_instance(std::ostream& out, int digits, const DdMat& a, const std::vector<std::pair<double, double>>& want,
                   Checker& chk, const std::string& label) {
  out << "a =" << print_octave(a, digits) << '\n';
  const auto r = schur(a);
  chk.expect(r.info == 0, label + " info " + std::to_string(r.info));
  if (r.info != 0) return 1;
  out << "t =" << print_octave(r.t, digits) << '\n';
  out << "vs =" << print_octave(r.z, digits) << '\n';
  out << "wr =" << print_octave(r.wr, digits) << '\n';
  out << "wi =" << print_octave(r.wi, digits) << '\n';
  out << "#eig(a)\n";
  match_eigs(chk, r, want);
  chk.ratios(testkit::residual_schur<dd_real>(a, r.t, r.z, label));
  return 0;
}

int demo_rgees(std::ostream& out, int digits) {
  Checker chk{out};
  out << "# Rgees demo...\n";
  (void)schur_instance(out, digits, DdMat::from_rows({{-2, 2, 2, 2}, {-3, 3, 2, 2}, {-2, 0, 4, 2}, {-1, 0, 0, 5}}),
                       {{1, 0}, {2, 0}, {3, 0}, {4, 0}}, chk, "Rgees");
  (void)schur_instance(out, digits, DdMat::from_rows({{4, -5, 0, 3}, {0, 4, -3, -5}, {5, -3, 4, 0}, {3, 0, 5, 4}}),
                       {{12, 0}, {1, 5}, {1, -5}, {2, 0}}, chk, "Rgees");
  return chk.status();
}

int demo_rgesvd(std::ostream& out, int digits) {
  const DdMat a = DdMat::from_rows({{1, 0, 0, 0, 2}, {0, 0, 3, 0, 0}, {0, 0, 0, 0, 0}, {0, 2, 0, 0, 0}});
  out << "# Rgesvd demo...\n";
  out << "a =" << print_octave(a, digits) << '\n';
  const auto r = svd(a);
  Checker chk{out};
  chk.expect(r.info == 0, "info " + std::to_string(r.info));
  if (r.info != 0) return chk.status();
  out << "s =" << print_octave(r.s, digits) << '\n';
  out << "u =" << print_octave(r.u, digits) << '\n';
  out << "vt =" << print_octave(r.vt, digits) << '\n';
  out << "#svd(a)\n";
  const dd_real tol = dd_real(100) * eps_dd();
  const dd_real want[] = {dd_real(3), sqrt(dd_real(5)), dd_real(2)};
  for (int i = 0; i < 3; ++i) chk.close(r.s[static_cast<std::size_t>(i)], want[i], tol * want[i], "s(" + std::to_string(i + 1) + ")");
  chk.close(r.s[3], dd_real(0), tol * Rlange<dd_real>('1', 4, 5, a.span(), a.ld()), "s(4)");
  chk.ratios(testkit::residual_svd<dd_real>(a, r.s, r.u, r.vt, "Rgesvd"));
  return chk.status();
}

int demo_hilbert(std::ostream& out, int digits) {
  out << "# Rgetri Hilbert demo...\n";
  Checker chk{out};
  for (index_t n = 1; n <= 8; ++n) {
    const auto row = testkit::hilbert_infnorm<dd_real>(n);
    out << "n=" << n << " InfnormL:(ainv * a - I)=" << format_number(row.infnorm, digits) << '\n';
    chk.expect(row.info == 0, "n=" + std::to_string(n) + " info " + std::to_string(row.info));
    if (n <= 2) {
      chk.expect(row.infnorm == 0.0, "n=" + std::to_string(n) + " InfnormL " + format_number(row.infnorm, digits) +
                                         " (expected exactly 0)");
    } else {
      chk.expect(row.infnorm < 1e-20, "n=" + std::to_string(n) + " InfnormL " + format_number(row.infnorm, digits) +
                                          " (expected < 1e-20)");
    }
  }
  return chk.status();
}

using Demo = int (*)(std::ostream&, int);

const std::map<std::string, Demo>& demos() {
  static const std::map<std::string, Demo> table = {{"rgemm", demo_rgemm}, {"cgemm", demo_cgemm},
                                                    {"rsyev", demo_rsyev}, {"rgees", demo_rgees},
                                                    {"rgesvd", demo_rgesvd}, {"hilbert", demo_hilbert}};
  return table;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"rgemm", "cgemm", "rsyev", "rgees", "rgesvd", "hilbert"};
  return names;
}

int run_demo(const std::string& name, std::ostream& out, int digits) {
  const auto it = demos().find(name);
  if (it == demos().end()) throw std::invalid_argument("unknown demo: " + name);
  return it->second(out, digits);
}

}  // namespace mpkit::cli
