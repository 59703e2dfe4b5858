#pragma once

// Flop-rate harness for the BLAS/LAPACK kernel set, sequential and threaded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mpkit/machine_params.hpp"
#include "mpkit/real.hpp"

namespace mpkit::bench {

struct BenchRecord {
  std::string routine;
  std::string precision;  // "f64" or "dd"
  index_t n = 0;
  index_t k = 0;  // inner dimension for Rgemm/Rsyrk, else 0
  int threads = 1;
  double elapsed_s = 0.0;
  double mflops = 0.0;
};

/// Leading-term flop counts:
///   Rgemm 2mnk, Rsyrk n^2 k + n k, Rgemv 2mn, Raxpy 2n, Rdot 2n,
///   Rgetrf (2/3) n^3, Rpotrf (1/3) n^3.
double flop_count(const std::string& routine, index_t m, index_t n, index_t k);

/// Square sweep convention: m = n, and k = n unless given.
double flop_count(const std::string& routine, index_t n, index_t k = 0);

const std::vector<std::string>& bench_routines();

/// Routines with a threaded variant; the rest always run on one thread.
bool has_parallel(const std::string& routine);

struct BenchOptions {
  std::string routine;
  Precision precision = Precision::double_double;
  std::vector<index_t> sizes;  // ascending
  int threads = 1;
  int repetitions = 3;
  std::uint64_t seed = 20211021;
  bool spot_check = true;  // oracle check on the smallest size before timing
  bool force = false;      // allow threads > hardware threads
};

/// Ascending sizes nmin, nmin+step, ... <= nmax.
std::vector<index_t> sweep(index_t nmin, index_t nmax, index_t step);

/// One record per size, in sweep order: warm-up run, then best-of-r wall
/// time. Sizes that cannot be allocated are skipped and noted in *notes.
/// Throws std::runtime_error if the spot check fails.
std::vector<BenchRecord> run_bench(const BenchOptions& opt, std::vector<std::string>* notes = nullptr);

inline constexpr const char* kBenchCsvHeader = "routine,precision,n,k,threads,elapsed_s,mflops";
void emit_csv(std::ostream& os, const std::vector<BenchRecord>& records);
void emit_csv(const std::string& path, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(std::istream& is);

}  // namespace mpkit::bench
