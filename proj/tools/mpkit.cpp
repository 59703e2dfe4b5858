// mpkit command-line tool.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mpkit/bench.hpp"
#include "mpkit/cli.hpp"
#include "mpkit/eft.hpp"
#include "mpkit/mpblas_par.hpp"
#include "mpkit/testkit.hpp"

namespace {

using namespace mpkit;

constexpr const char* kVersion = "1.0.0";

Precision parse_precision(const std::string& s) {
  if (s == "dd") return Precision::double_double;
  if (s == "f64") return Precision::binary64;
  throw std::invalid_argument("unknown precision: " + s);
}

template <Real T>
Matrix<T> load(const std::string& path) {
  if constexpr (std::is_same_v<T, double>) {
    return cli::load_matrix_f64(path);
  } else {
    return cli::load_matrix_dd(path);
  }
}

template <Real T>
int cmd_invert(const std::string& path, int digits) {
  const Matrix<T> a = load<T>(path);
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix is not square");
  const auto r = inverse(a);
  if (r.info != 0) {
    std::cout << "# singular: U(" << r.info << "," << r.info << ") is exactly zero\n";
    return 1;
  }
  std::cout << "ainv =" << cli::print_octave(r.inv, digits) << '\n';
  std::cout << "# " << testkit::format_line(testkit::residual_inverse<T>(a, r.inv, "Rgetri")) << '\n';
  return 0;
}

template <Real T>
int cmd_eig(const std::string& path, int digits) {
  const Matrix<T> a = load<T>(path);
  if (a.rows() != a.cols()) throw std::invalid_argument("eig: matrix is not square");
  const auto r = eig_sym(a);
  if (r.info != 0) {
    std::cout << "# Rsyev failed to converge, info=" << r.info << '\n';
    return 1;
  }
  std::cout << "w =" << cli::print_octave(r.w, digits) << '\n';
  std::cout << "Z =" << cli::print_octave(r.v, digits) << '\n';
  for (const auto& rep : testkit::residual_eig<T>(a, r.w, r.v, "Rsyev")) std::cout << "# " << testkit::format_line(rep) << '\n';
  return 0;
}

template <Real T>
int cmd_svd(const std::string& path, int digits) {
  const Matrix<T> a = load<T>(path);
  const auto r = svd(a);
  if (r.info != 0) {
    std::cout << "# Rgesvd failed to converge, info=" << r.info << '\n';
    return 1;
  }
  std::cout << "s =" << cli::print_octave(r.s, digits) << '\n';
  std::cout << "u =" << cli::print_octave(r.u, digits) << '\n';
  std::cout << "vt =" << cli::print_octave(r.vt, digits) << '\n';
  for (const auto& rep : testkit::residual_svd<T>(a, r.s, r.u, r.vt, "Rgesvd")) std::cout << "# " << testkit::format_line(rep) << '\n';
  return 0;
}

template <Real T>
int cmd_schur(const std::string& path, int digits) {
  const Matrix<T> a = load<T>(path);
  if (a.rows() != a.cols()) throw std::invalid_argument("schur: matrix is not square");
  const auto r = schur(a);
  if (r.info != 0) {
    std::cout << "# Rgees failed to converge, info=" << r.info << '\n';
    return 1;
  }
  std::cout << "t =" << cli::print_octave(r.t, digits) << '\n';
  std::cout << "vs =" << cli::print_octave(r.z, digits) << '\n';
  std::cout << "wr =" << cli::print_octave(r.wr, digits) << '\n';
  std::cout << "wi =" << cli::print_octave(r.wi, digits) << '\n';
  for (const auto& rep : testkit::residual_schur<T>(a, r.t, r.z, "Rgees")) std::cout << "# " << testkit::format_line(rep) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mpkit: double-double BLAS/LAPACK kit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("mpkit ") + kVersion + " (two_prod: " + eft::two_prod_method() + ")");

  bool long_digits = false;
  app.add_flag("--long", long_digits, "Print 33 digits after the point instead of 16");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Run a self-checking worked example");
  demo->add_option("name", demo_name, "Example name")->required()->check(CLI::IsMember(cli::demo_names()));

  testkit::QaOptions qa_opt;
  std::string qa_csv;
  auto* qa = app.add_subcommand("qa", "Residual-ratio and oracle suite");
  qa->add_option("--seeds", qa_opt.seeds, "Seeds per routine and size")->check(CLI::PositiveNumber);
  qa->add_option("--nmax", qa_opt.nmax, "Largest size from {1,2,3,5,10,50}");
  qa->add_option("--routine", qa_opt.routine, "Single routine")->check(CLI::IsMember(testkit::qa_routines()));
  qa->add_option("--csv", qa_csv, "Also write the reports as CSV");

  bench::BenchOptions b_opt;
  b_opt.threads = default_threads();
  std::string b_precision = "dd";
  std::string b_csv;
  index_t nmin = 0, nmax = 0, step = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Flop-rate sweep (CSV on stdout)");
  bench_cmd->add_option("--routine", b_opt.routine, "Kernel")->required()->check(CLI::IsMember(bench::bench_routines()));
  bench_cmd->add_option("--precision", b_precision, "f64 or dd")->check(CLI::IsMember({"f64", "dd"}));
  bench_cmd->add_option("--nmin", nmin, "First size")->required();
  bench_cmd->add_option("--nmax", nmax, "Last size")->required();
  bench_cmd->add_option("--step", step, "Size step")->required();
  bench_cmd->add_option("--threads", b_opt.threads, "Thread count (default MPKIT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", b_opt.repetitions, "Timed repetitions (best is kept)")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--force", b_opt.force, "Allow more threads than hardware threads");
  bench_cmd->add_option("--csv", b_csv, "Also write the CSV to a file");

  std::string file;
  std::string precision = "dd";
  auto add_file_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--file", file, "Matrix file (\"m n\" header, then rows)")->required();
    c->add_option("--precision", precision, "f64 or dd")->check(CLI::IsMember({"f64", "dd"}));
    return c;
  };
  auto* invert = add_file_cmd("invert", "Inverse via Rgetrf + Rgetri");
  auto* eig = add_file_cmd("eig", "Symmetric eigenproblem via Rsyev");
  auto* svd_cmd = add_file_cmd("svd", "Singular value decomposition via Rgesvd");
  auto* schur_cmd = add_file_cmd("schur", "Real Schur form via Rgees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const int digits = long_digits ? cli::kLongDigits : cli::kShortDigits;
  try {
    if (*demo) return cli::run_demo(demo_name, std::cout, digits);

    if (*qa) {
      const auto reports = testkit::run_qa(qa_opt);
      testkit::write_text(std::cout, reports);
      std::size_t failed = 0;
      for (const auto& r : reports) failed += r.passed ? 0 : 1;
      std::cout << "# " << reports.size() << " ratios, " << failed << " above threshold\n";
      if (!qa_csv.empty()) {
        std::ofstream f(qa_csv);
        testkit::write_csv(f, reports);
        if (!f) throw std::runtime_error("cannot write " + qa_csv);
      }
      return failed == 0 ? 0 : 1;
    }

    if (*bench_cmd) {
      b_opt.precision = parse_precision(b_precision);
      b_opt.sizes = bench::sweep(nmin, nmax, step);
      std::vector<std::string> notes;
      const auto records = bench::run_bench(b_opt, &notes);
      bench::emit_csv(std::cout, records);
      for (const auto& n : notes) std::cerr << "note: " << n << '\n';
      if (!b_csv.empty()) bench::emit_csv(b_csv, records);
      return 0;
    }

    const Precision p = parse_precision(precision);
    const bool f64 = p == Precision::binary64;
    if (*invert) return f64 ? cmd_invert<double>(file, digits) : cmd_invert<dd_real>(file, digits);
    if (*eig) return f64 ? cmd_eig<double>(file, digits) : cmd_eig<dd_real>(file, digits);
    if (*svd_cmd) return f64 ? cmd_svd<double>(file, digits) : cmd_svd<dd_real>(file, digits);
    if (*schur_cmd) return f64 ? cmd_schur<double>(file, digits) : cmd_schur<dd_real>(file, digits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
