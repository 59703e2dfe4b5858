#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mpkit/bench.hpp"

using namespace mpkit;
using namespace mpkit::bench;

TEST(FlopCount, Examples) {
  EXPECT_EQ(flop_count("Rgemm", 10), 2000.0);
  EXPECT_EQ(flop_count("Rgemm", 2, 3, 4), 48.0);
  EXPECT_EQ(flop_count("Raxpy", 5), 10.0);
  EXPECT_EQ(flop_count("Rgetrf", 3), 18.0);
  EXPECT_EQ(flop_count("Rpotrf", 3), 9.0);
  EXPECT_THROW((void)flop_count("Rfoo", 3), std::invalid_argument);
}

TEST(Sweep, Sizes) {
  EXPECT_EQ(sweep(100, 400, 100), (std::vector<index_t>{100, 200, 300, 400}));
  EXPECT_EQ(sweep(5, 5, 1), (std::vector<index_t>{5}));
  EXPECT_THROW((void)sweep(10, 5, 1), std::invalid_argument);
  EXPECT_THROW((void)sweep(1, 5, 0), std::invalid_argument);
}

TEST(Csv, EmptyRunIsHeaderOnly) {
  std::ostringstream os;
  emit_csv(os, {});
  EXPECT_EQ(os.str(), std::string(kBenchCsvHeader) + "\n");
}

TEST(Csv, RoundTripThroughFile) {
  const std::vector<BenchRecord> in{{"Rgemm", "dd", 64, 64, 2, 0.125, 4194.304}, {"Raxpy", "f64", 1000, 0, 1, 1e-6, 2000}};
  const std::string path = ::testing::TempDir() + "bench_roundtrip.csv";
  emit_csv(path, in);
  std::ifstream is(path);
  const auto out = parse_csv(is);
  ASSERT_EQ(out.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(out[i].routine, in[i].routine);
    EXPECT_EQ(out[i].precision, in[i].precision);
    EXPECT_EQ(out[i].n, in[i].n);
    EXPECT_EQ(out[i].k, in[i].k);
    EXPECT_EQ(out[i].threads, in[i].threads);
    EXPECT_EQ(out[i].elapsed_s, in[i].elapsed_s);
    EXPECT_EQ(out[i].mflops, in[i].mflops);
  }
  std::remove(path.c_str());
  EXPECT_THROW(emit_csv("/nonexistent-dir/x.csv", in), std::runtime_error);
}

TEST(RunBench, RowCountAndArithmetic) {
  for (const auto& routine : bench_routines()) {
    BenchOptions opt;
    opt.routine = routine;
    opt.precision = Precision::binary64;
    opt.sizes = {8, 16};
    opt.repetitions = 1;
    const auto records = run_bench(opt);
    ASSERT_EQ(records.size(), 2U) << routine;
    for (const auto& r : records) {
      EXPECT_EQ(r.routine, routine);
      EXPECT_EQ(r.precision, "f64");
      EXPECT_GT(r.elapsed_s, 0.0);
      const double flops = flop_count(routine, r.n, r.k);
      EXPECT_NEAR(r.mflops * r.elapsed_s * 1e6, flops, 1e-9 * flops) << routine;
    }
  }
}

TEST(RunBench, DoubleDoubleAndThreads) {
  BenchOptions opt;
  opt.routine = "Rgemm";
  opt.precision = Precision::double_double;
  opt.sizes = {12};
  opt.repetitions = 1;
  opt.threads = 2;
  opt.force = true;
  const auto r = run_bench(opt);
  ASSERT_EQ(r.size(), 1U);
  EXPECT_EQ(r[0].precision, "dd");
  EXPECT_EQ(r[0].threads, 2);

  opt.routine = "Rpotrf";
  EXPECT_EQ(run_bench(opt)[0].threads, 1);  // no threaded variant
  opt.routine = "Rnope";
  EXPECT_THROW((void)run_bench(opt), std::invalid_argument);
}
