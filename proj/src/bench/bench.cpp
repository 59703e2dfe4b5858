#include "mpkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mpkit/mpblas_par.hpp"
#include "mpkit/testkit.hpp"

namespace mpkit::bench {

namespace {

constexpr double kEps64 = 0x1p-53;

double cube(index_t n) { return static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n); }

}  // namespace

double flop_count(const std::string& routine, index_t m, index_t n, index_t k) {
  const auto dm = static_cast<double>(m);
  const auto dn = static_cast<double>(n);
  const auto dk = static_cast<double>(k);
  if (routine == "Rgemm") return 2.0 * dm * dn * dk;
  if (routine == "Rsyrk") return dn * dn * dk + dn * dk;
  if (routine == "Rgemv") return 2.0 * dm * dn;
  if (routine == "Raxpy" || routine == "Rdot") return 2.0 * dn;
  if (routine == "Rgetrf") return 2.0 * cube(n) / 3.0;
  if (routine == "Rpotrf") return cube(n) / 3.0;
  throw std::invalid_argument("flop_count: unknown routine " + routine);
}

double flop_count(const std::string& routine, index_t n, index_t k) {
  return flop_count(routine, n, n, k > 0 ? k : n);
}

const std::vector<std::string>& bench_routines() {
  static const std::vector<std::string> names = {"Raxpy", "Rdot", "Rgemv", "Rgemm", "Rsyrk", "Rgetrf", "Rpotrf"};
  return names;
}

bool has_parallel(const std::string& routine) {
  return routine == "Raxpy" || routine == "Rdot" || routine == "Rgemm";
}

std::vector<index_t> sweep(index_t nmin, index_t nmax, index_t step) {
  if (nmin < 1 || nmax < nmin || step < 1) throw std::invalid_argument("bench: need 1 <= nmin <= nmax and step >= 1");
  std::vector<index_t> out;
  for (index_t n = nmin; n <= nmax; n += step) out.push_back(n);
  return out;
}

namespace {

/// Inputs are exact binary64 values, so the same data feeds both
/// precisions and the naive binary64 reference.
struct Data {
  index_t n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> x, y;
  Matrix<double> a, b, c;
};

Data make_data(const std::string& routine, index_t n, std::uint64_t seed) {
  testkit::Rng rng(seed);
  Data d;
  d.n = n;
  d.alpha = rng.uniform();
  d.beta = rng.uniform();
  auto mat = [&](index_t m, index_t cols) {
    Matrix<double> a(m, cols);
    for (index_t j = 0; j < cols; ++j)
      for (index_t i = 0; i < m; ++i) a(i, j) = rng.uniform();
    return a;
  };
  auto vec = [&](index_t len) {
    std::vector<double> v(static_cast<std::size_t>(len));
    for (double& e : v) e = rng.uniform();
    return v;
  };
  if (routine == "Raxpy" || routine == "Rdot") {
    d.x = vec(n);
    d.y = vec(n);
  } else if (routine == "Rgemv") {
    d.a = mat(n, n);
    d.x = vec(n);
    d.y = vec(n);
  } else if (routine == "Rgemm") {
    d.a = mat(n, n);
    d.b = mat(n, n);
    d.c = mat(n, n);
  } else if (routine == "Rsyrk") {
    d.a = mat(n, n);
    d.c = mat(n, n);
  } else if (routine == "Rgetrf") {
    d.a = mat(n, n);
  } else if (routine == "Rpotrf") {
    // Symmetric, strictly diagonally dominant with positive diagonal.
    d.a = mat(n, n);
    for (index_t j = 0; j < n; ++j) {
      for (index_t i = j + 1; i < n; ++i) d.a(i, j) = d.a(j, i);
      d.a(j, j) += static_cast<double>(n);
    }
  }
  return d;
}

/// Precision-T copy of the inputs plus the output buffers of one call.
template <Real T>
struct Work {
  T alpha, beta;
  std::vector<T> x, y;
  Matrix<T> a, b, c;
  std::vector<index_t> ipiv;
  T dot{};
};

template <Real T>
std::vector<T> cvt(const std::vector<double>& v) {
  return {v.begin(), v.end()};
}

template <Real T>
Work<T> load(const Data& d) {
  Work<T> w{T(d.alpha), T(d.beta), cvt<T>(d.x), cvt<T>(d.y), convert<T>(d.a), convert<T>(d.b), convert<T>(d.c), {},
            T(0)};
  w.ipiv.resize(static_cast<std::size_t>(d.n));
  return w;
}

/// Resets the in/out operands, outside the timed region.
template <Real T>
void reset(Work<T>& w, const Work<T>& src) {
  w.y = src.y;
  w.c = src.c;
  w.a = src.a;
}

template <Real T>
index_t call(const std::string& routine, index_t n, int threads, Work<T>& w) {
  if (routine == "Raxpy") {
    Raxpy_par<T>(n, w.alpha, w.x, 1, w.y, 1, threads);
  } else if (routine == "Rdot") {
    w.dot = Rdot_par<T>(n, w.x, 1, w.y, 1, threads);
  } else if (routine == "Rgemv") {
    (void)Rgemv<T>('N', n, n, w.alpha, w.a.span(), w.a.ld(), w.x, 1, w.beta, w.y, 1);
  } else if (routine == "Rgemm") {
    (void)Rgemm_par<T>('N', 'N', n, n, n, w.alpha, w.a.span(), w.a.ld(), w.b.span(), w.b.ld(), w.beta, w.c.span(),
                       w.c.ld(), threads);
  } else if (routine == "Rsyrk") {
    (void)Rsyrk<T>('U', 'N', n, n, w.alpha, w.a.span(), w.a.ld(), w.beta, w.c.span(), w.c.ld());
  } else if (routine == "Rgetrf") {
    return Rgetrf<T>(n, n, w.a.span(), w.a.ld(), w.ipiv);
  } else if (routine == "Rpotrf") {
    return Rpotrf<T>('U', n, w.a.span(), w.a.ld());
  }
  return 0;
}

/// max |round(out_i) - ref_i| / (k eps64 scale_i).
double oracle_ratio(const std::vector<double>& out, const std::vector<double>& ref, const std::vector<double>& scale,
                    index_t k) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double diff = std::fabs(out[i] - ref[i]);
    if (diff == 0.0) continue;
    const double denom = static_cast<double>(std::max<index_t>(1, k)) * kEps64 * scale[i];
    worst = denom == 0.0 ? std::numeric_limits<double>::infinity() : std::max(worst, diff / denom);
  }
  return worst;
}

template <Real T>
std::vector<double> rounded(const std::vector<T>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

template <Real T>
std::vector<double> rounded(const Matrix<T>& a) {
  std::vector<double> out;
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) out.push_back(to_double(a(i, j)));
  return out;
}

/// Checks the benched call on d against a naive binary64 evaluation (BLAS)
/// or the residual ratio (factorizations). For threaded routines the result
/// must also equal the sequential kernel bitwise.
template <Real T>
void spot_check(const std::string& routine, const Data& d, int threads) {
  const index_t n = d.n;
  Work<T> w = load<T>(d);
  const index_t info = call<T>(routine, n, threads, w);
  double ratio = 0.0;
  if (routine == "Rgetrf" || routine == "Rpotrf") {
    const Matrix<T> a = convert<T>(d.a);
    if (info != 0) throw std::runtime_error("bench spot check: " + routine + " info=" + std::to_string(info));
    const auto rep = routine == "Rgetrf" ? testkit::residual_lu<T>(a, w.a, w.ipiv) : testkit::residual_chol<T>(a, w.a, 'U');
    ratio = rep.ratio;
  } else {
    std::vector<double> ref, scale, out;
    index_t k = 1;
    if (routine == "Raxpy") {
      for (index_t i = 0; i < n; ++i) {
        const double p = d.alpha * d.x[i];
        ref.push_back(d.y[i] + p);
        scale.push_back(std::fabs(d.y[i]) + std::fabs(p));
      }
      out = rounded(w.y);
    } else if (routine == "Rdot") {
      double s = 0.0, as = 0.0;
      for (index_t i = 0; i < n; ++i) {
        s += d.x[i] * d.y[i];
        as += std::fabs(d.x[i] * d.y[i]);
      }
      ref = {s};
      scale = {as};
      out = {to_double(w.dot)};
      k = n;
    } else if (routine == "Rgemv") {
      for (index_t i = 0; i < n; ++i) {
        double s = 0.0, as = 0.0;
        for (index_t l = 0; l < n; ++l) {
          s += d.a(i, l) * d.x[l];
          as += std::fabs(d.a(i, l) * d.x[l]);
        }
        ref.push_back(d.alpha * s + d.beta * d.y[i]);
        scale.push_back(std::fabs(d.alpha) * as + std::fabs(d.beta * d.y[i]));
      }
      out = rounded(w.y);
      k = n + 2;
    } else {
      const bool syrk = routine == "Rsyrk";
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < n; ++i) {
          if (syrk && i > j) {
            ref.push_back(d.c(i, j));
            scale.push_back(std::fabs(d.c(i, j)));
            continue;
          }
          double s = 0.0, as = 0.0;
          for (index_t l = 0; l < n; ++l) {
            const double p = d.a(i, l) * (syrk ? d.a(j, l) : d.b(l, j));
            s += p;
            as += std::fabs(p);
          }
          ref.push_back(d.alpha * s + d.beta * d.c(i, j));
          scale.push_back(std::fabs(d.alpha) * as + std::fabs(d.beta * d.c(i, j)));
        }
      out = rounded(w.c);
      k = n + 2;
    }
    ratio = oracle_ratio(out, ref, scale, k);
  }
  if (!(ratio < testkit::kThreshold)) {
    throw std::runtime_error("bench spot check: " + routine + " n=" + std::to_string(n) +
                             " ratio=" + std::to_string(ratio));
  }
  if (threads > 1 && has_parallel(routine)) {
    Work<T> seq = load<T>(d);
    (void)call<T>(routine, n, 1, seq);
    bool same = seq.dot == w.dot;
    if (routine == "Raxpy") same = seq.y == w.y;
    if (routine == "Rgemm") same = std::ranges::equal(seq.c.span(), w.c.span());
    if (!same) throw std::runtime_error("bench spot check: " + routine + " threaded result differs from sequential");
  }
}

template <Real T>
BenchRecord time_one(const std::string& routine, const Data& d, int threads, int reps) {
  const Work<T> src = load<T>(d);
  Work<T> w = src;
  (void)call<T>(routine, d.n, threads, w);  // warm-up
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r) {
    reset(w, src);
    const auto t0 = std::chrono::steady_clock::now();
    (void)call<T>(routine, d.n, threads, w);
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  // Clock granularity guard: elapsed must be positive.
  best = std::max(best, 1e-9);
  BenchRecord rec;
  rec.routine = routine;
  rec.precision = std::is_same_v<T, double> ? "f64" : "dd";
  rec.n = d.n;
  rec.k = (routine == "Rgemm" || routine == "Rsyrk") ? d.n : 0;
  rec.threads = has_parallel(routine) ? threads : 1;
  rec.elapsed_s = best;
  rec.mflops = flop_count(routine, d.n) / best / 1e6;
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::vector<std::string>* notes) {
  const auto& names = bench_routines();
  if (std::find(names.begin(), names.end(), opt.routine) == names.end())
    throw std::invalid_argument("bench: unknown routine " + opt.routine);
  if (opt.sizes.empty()) throw std::invalid_argument("bench: empty size sweep");
  if (!std::is_sorted(opt.sizes.begin(), opt.sizes.end()) || opt.sizes.front() < 1)
    throw std::invalid_argument("bench: sizes must be positive and ascending");
  if (opt.threads < 1 || opt.repetitions < 1) throw std::invalid_argument("bench: threads and repetitions must be >= 1");
  const auto hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (opt.threads > hw && !opt.force)
    throw std::invalid_argument("bench: " + std::to_string(opt.threads) + " threads exceeds " + std::to_string(hw) +
                                " hardware threads");
  const bool dd = opt.precision == Precision::double_double;

  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < opt.sizes.size(); ++i) {
    const index_t n = opt.sizes[i];
    try {
      const Data d = make_data(opt.routine, n, opt.seed ^ static_cast<std::uint64_t>(n));
      if (i == 0 && opt.spot_check) {
        if (dd) {
          spot_check<dd_real>(opt.routine, d, opt.threads);
        } else {
          spot_check<double>(opt.routine, d, opt.threads);
        }
      }
      out.push_back(dd ? time_one<dd_real>(opt.routine, d, opt.threads, opt.repetitions)
                       : time_one<double>(opt.routine, d, opt.threads, opt.repetitions));
    } catch (const std::bad_alloc&) {
      if (notes) notes->push_back(opt.routine + " n=" + std::to_string(n) + ": allocation failed, skipped");
    } catch (const std::length_error&) {
      if (notes) notes->push_back(opt.routine + " n=" + std::to_string(n) + ": allocation failed, skipped");
    }
  }
  return out;
}

void emit_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchCsvHeader << '\n';
  char buf[64];
  for (const auto& r : records) {
    os << r.routine << ',' << r.precision << ',' << r.n << ',' << r.k << ',' << r.threads << ',';
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", r.elapsed_s, r.mflops);
    os << buf << '\n';
  }
}

void emit_csv(const std::string& path, const std::vector<BenchRecord>& records) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("bench: cannot open " + path);
  emit_csv(f, records);
  if (!f) throw std::runtime_error("bench: write failed: " + path);
}

std::vector<BenchRecord> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kBenchCsvHeader) throw std::runtime_error("bench csv: bad header");
  std::vector<BenchRecord> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw std::runtime_error("bench csv: line " + std::to_string(lineno) + ": expected 7 fields");
    try {
      out.push_back({f[0], f[1], std::stoll(f[2]), std::stoll(f[3]), std::stoi(f[4]), std::stod(f[5]), std::stod(f[6])});
    } catch (const std::logic_error&) {
      throw std::runtime_error("bench csv: line " + std::to_string(lineno) + ": bad number");
    }
  }
  return out;
}

}  // namespace mpkit::bench
