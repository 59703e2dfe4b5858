#include <gtest/gtest.h>

#include <limits>

#include "mpkit/eft.hpp"
#include "support.hpp"

using namespace mpkit;
using test::exact;

TEST(TwoSum, BelowHalfUlpIsTheError) {
  const auto s = eft::two_sum(1.0, 0x1p-60);
  EXPECT_EQ(s.r, 1.0);
  EXPECT_EQ(s.e, 0x1p-60);
}

TEST(TwoSum, ExactCancellation) {
  const auto s = eft::two_sum(3.141592653589793, -3.141592653589793);
  EXPECT_EQ(s.r, 0.0);
  EXPECT_EQ(s.e, 0.0);
}

TEST(TwoSum, NonFiniteHasZeroError) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(eft::two_sum(inf, 1.0).e, 0.0);
  EXPECT_TRUE(std::isinf(eft::two_sum(0x1.fffffffffffffp1023, 0x1.fffffffffffffp1023).r));
  EXPECT_TRUE(std::isnan(eft::two_sum(std::nan(""), 1.0).r));
}

TEST(TwoSum, RandomPairsAgainstRationals) {
  test::DoubleGen gen(11, -300, 300);
  for (int i = 0; i < 20000; ++i) {
    const double a = gen();
    const double b = i % 3 == 0 ? -a * (1 + 0x1p-30) : gen();
    const auto s = eft::two_sum(a, b);
    ASSERT_EQ(s.r, a + b);
    ASSERT_EQ(exact(s.r) + exact(s.e), exact(a) + exact(b)) << a << " " << b;
    const auto d = eft::two_diff(a, b);
    ASSERT_EQ(exact(d.r) + exact(d.e), exact(a) - exact(b));
    const auto q = std::fabs(a) >= std::fabs(b) ? eft::quick_two_sum(a, b) : eft::quick_two_sum(b, a);
    ASSERT_EQ(exact(q.r) + exact(q.e), exact(a) + exact(b));
  }
}

TEST(TwoProd, Identity) {
  const auto p = eft::two_prod(1.0, 0.1);
  EXPECT_EQ(p.r, 0.1);
  EXPECT_EQ(p.e, 0.0);
}

TEST(TwoProd, SplitterSquare) {
  const double x = 0x1p27 + 1;  // 134217729
  for (const auto& p : {eft::two_prod(x, x), eft::two_prod_dekker(x, x), eft::two_prod_fma(x, x)}) {
    EXPECT_EQ(exact(p.r) + exact(p.e), test::Rational(boost::multiprecision::cpp_int(134217729) * 134217729));
  }
}

TEST(TwoProd, RandomPairsBothMethods) {
  test::DoubleGen gen(12, -250, 250);
  for (int i = 0; i < 20000; ++i) {
    const double a = gen();
    const double b = gen();
    const auto want = exact(a) * exact(b);
    const auto f = eft::two_prod_fma(a, b);
    const auto d = eft::two_prod_dekker(a, b);
    ASSERT_EQ(f.r, a * b);
    ASSERT_EQ(exact(f.r) + exact(f.e), want);
    ASSERT_EQ(exact(d.r) + exact(d.e), want);
  }
}

TEST(TwoProd, OverflowIsNonFinite) {
  const auto p = eft::two_prod(1e200, 1e200);
  EXPECT_TRUE(std::isinf(p.r));
  EXPECT_EQ(p.e, 0.0);
}

TEST(VeltkampSplit, HalvesAreShortAndExact) {
  test::DoubleGen gen(13, -100, 100);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen();
    const auto [hi, lo] = eft::veltkamp_split(a);
    ASSERT_EQ(hi + lo, a);
    // hi fits in 26 bits: scaling it to an integer leaves no fraction.
    int e = 0;
    (void)std::frexp(hi, &e);
    const double scaled = std::ldexp(hi, 26 - e);
    ASSERT_EQ(scaled, std::trunc(scaled));
  }
}

TEST(TwoProd, MethodName) {
  const std::string m = eft::two_prod_method();
  EXPECT_TRUE(m == "fma" || m == "dekker-split");
}
