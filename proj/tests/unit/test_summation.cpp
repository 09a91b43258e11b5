#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "zws/rational.hpp"
#include "zws/summation.hpp"

namespace {

TEST(NeumaierSum, RecoversCancelledSmallTerms) {
  zws::NeumaierSum<double> sum;
  sum.add(1.0);
  sum.add(1e100);
  sum.add(1.0);
  sum.add(-1e100);
  EXPECT_EQ(sum.value(), 2.0);
}

TEST(NeumaierSum, MatchesExactSumOfRandomDoubles) {
  // Exact reference through rationals: every double is a dyadic rational.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-20.0, 20.0);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    zws::NeumaierSum<double> sum;
    zws::Rational exact;
    for (int i = 0; i < 200; ++i) {
      const double v = (sign(rng) ? 1.0 : -1.0) * std::exp(mag(rng));
      sum.add(v);
      int e = 0;
      const double frac = std::frexp(v, &e);
      const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
      zws::Rational term(mant);
      const zws::Rational two(2);
      for (int k = 0; k < std::abs(e - 53); ++k) term = (e - 53 > 0) ? term * two : term / two;
      exact += term;
    }
    const double reference = exact.to_double();
    EXPECT_NEAR(sum.value(), reference, 4e-16 * std::max(1.0, std::abs(reference))) << "trial " << trial;
  }
}

TEST(NeumaierSum, ComplexAccumulatesComponentwise) {
  zws::NeumaierSum<std::complex<double>> sum;
  sum.add({1.0, -1.0});
  sum.add({1e100, 1e100});
  sum.add({1.0, -1.0});
  sum.add({-1e100, -1e100});
  EXPECT_EQ(sum.value(), std::complex<double>(2.0, -2.0));
}

}  // namespace
