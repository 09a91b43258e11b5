#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "zws/reflection.hpp"
#include "zws/special_functions.hpp"
#include "zws/zeta_w.hpp"

namespace {

using zws::ComplexValue;
using zws::TruncationIndex;
constexpr double kPi = std::numbers::pi;

ComplexValue chi_at(std::int64_t n, ComplexValue s) {
  const auto r = zws::chi(TruncationIndex(n), s);
  EXPECT_FALSE(r.pole) << s;
  return r.value;
}

TEST(Chi, SpecialPoints) {
  EXPECT_TRUE(zws::chi(TruncationIndex(4), 0.0).pole);
  EXPECT_EQ(chi_at(4, 1.0), ComplexValue(0.0, 0.0));
  for (std::int64_t n : {1, 9, 12, 1000}) EXPECT_EQ(chi_at(n, 0.5), ComplexValue(1.0, 0.0));
  EXPECT_LE(std::abs(chi_at(5, 2.0)), 1e-15);
}

TEST(Chi, FrozenValues) {
  EXPECT_NEAR(chi_at(3, 0.75).real(), 0.10305993053181343, 1e-13);
  EXPECT_LE(std::abs(chi_at(10, {0.2, 3.0}) - ComplexValue(0.97634851915534392, -0.52236802027983873)), 1e-12);
  EXPECT_NEAR(chi_at(25, 1.5).real(), 0.25067525913740926, 1e-13);
  EXPECT_NEAR(chi_at(1, 3.0).real(), -16.0 / 51.0, 1e-15);
}

TEST(Chi, FunctionalIdentity) {
  EXPECT_NEAR(std::abs(chi_at(3, 0.75) * chi_at(3, 0.25) - 1.0), 0.0, 1e-12);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-1.5, 2.5);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (std::int64_t n : {1, 5, 25}) {
    for (int i = 0; i < 100; ++i) {
      ComplexValue s(re(rng), im(rng));
      if (std::abs(s) < 0.05 || std::abs(s - 0.5) < 0.05 || std::abs(s - 1.0) < 0.05) continue;
      EXPECT_LE(std::abs(chi_at(n, 1.0 - s) * chi_at(n, s) - 1.0), 1e-11) << n << " " << s;
    }
  }
}

TEST(Chi, CriticalLineModulus) {
  for (std::int64_t n : {1, 10, 100}) {
    for (int k = -40; k <= 40; ++k) {
      const double t = 0.5 * k;
      EXPECT_LE(std::abs(std::abs(chi_at(n, {0.5, t})) - 1.0), 1e-11) << n << " " << t;
    }
  }
}

TEST(Chi, ConjugateSymmetry) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> re(-2.0, 3.0);
  std::uniform_real_distribution<double> im(0.1, 25.0);
  for (int i = 0; i < 50; ++i) {
    const ComplexValue s(re(rng), im(rng));
    EXPECT_LE(std::abs(chi_at(7, std::conj(s)) - std::conj(chi_at(7, s))), 1e-12 * std::abs(chi_at(7, s)));
  }
}

TEST(Chi, DefiningEquation) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> re(-1.5, 2.5);
  std::uniform_real_distribution<double> im(-8.0, 8.0);
  for (int i = 0; i < 50; ++i) {
    const ComplexValue s(re(rng), im(rng));
    const auto lhs = zws::zeta_w(TruncationIndex(11), 1.0 - s).value;
    const auto rhs = chi_at(11, s) * zws::zeta_w(TruncationIndex(11), s).value;
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::abs(lhs)) << s;
  }
}

TEST(AbcSums, SingleTermAndFrozen) {
  const auto one = zws::abc_sums(TruncationIndex(1));
  EXPECT_NEAR(one.a, std::numbers::ln2, 1e-16);
  EXPECT_NEAR(one.b, -0.5 * std::numbers::ln2, 1e-16);
  EXPECT_NEAR(one.c, 0.5 * std::numbers::ln2 * std::numbers::ln2, 1e-16);
  EXPECT_NEAR(one.deficit, 1.0 - std::numbers::ln2, 1e-16);
  const auto big = zws::abc_sums(TruncationIndex(1000));
  EXPECT_NEAR(big.a, 996.62660082705724, 1e-11);
  EXPECT_NEAR(big.b, -6.9018529263888318, 1e-12);
  EXPECT_NEAR(big.c, 5903.7334140179168, 1e-9);
  EXPECT_NEAR(big.deficit, 3.3733991729427637, 1e-13);
}

TEST(AbcSums, DeficitPositiveAndIncreasing) {
  double prev = 0.0;
  for (std::int64_t n = 1; n <= 300; ++n) {
    const auto s = zws::abc_sums(TruncationIndex(n));
    EXPECT_LT(s.a, static_cast<double>(n));
    EXPECT_GT(s.c, 0.0);
    EXPECT_GT(s.deficit, prev);
    prev = s.deficit;
  }
}

TEST(ResidueAtZero, FrozenValuesAndDualMethod) {
  const std::pair<std::int64_t, double> cases[] = {
      {1, -5.0345388897414722}, {10, -1.3441069775001597},
      {176, -0.00015134505836485634}, {177, 0.0010448998608109561}};
  for (const auto& [n, want] : cases) {
    const auto r = zws::residue_chi_at_0(TruncationIndex(n));
    EXPECT_EQ(r.method, zws::ResidueMethod::closed_form);
    EXPECT_NEAR(r.value, want, 1e-9 * std::max(1.0, std::abs(want))) << n;
    EXPECT_GE(r.est_error, 0.0);
    EXPECT_LT(r.est_error, 1e-6) << n;
    EXPECT_NEAR(zws::laurent_residue(TruncationIndex(n)), want, 1e-6) << n;
  }
}

TEST(ResidueAtZero, ClosedFormAgreesWithLaurentFitUpToThirty) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto r = zws::residue_chi_at_0(TruncationIndex(n));
    EXPECT_LT(r.est_error, 1e-6) << n;
  }
}

TEST(ResidueAtZero, SignChange) {
  EXPECT_LT(zws::residue_chi_at_0(TruncationIndex(176)).value, 0.0);
  EXPECT_GT(zws::residue_chi_at_0(TruncationIndex(177)).value, 0.0);
  EXPECT_LT(zws::laurent_residue(TruncationIndex(176)), 0.0);
  EXPECT_GT(zws::laurent_residue(TruncationIndex(177)), 0.0);
}

TEST(ResidueAtZero, MatchesNegativeResidueOfInverseAtOne) {
  for (std::int64_t n : {3, 30}) {
    EXPECT_NEAR(zws::laurent_residue(TruncationIndex(n)),
                -zws::residue_inv_chi_at_1_laurent(TruncationIndex(n)), 1e-6)
        << n;
  }
}

TEST(ResidueOfInverseAtTwo, FrozenValuesAndDualMethod) {
  EXPECT_NEAR(zws::residue_inv_chi_at_2(TruncationIndex(1)), 2.5 / (1.0 - 2.0 * std::numbers::ln2), 1e-13);
  const std::pair<std::int64_t, double> cases[] = {
      {1, -6.4717486239052246}, {20, -0.34576168387294795}, {100, -0.066816025996680751}};
  for (const auto& [n, want] : cases) {
    EXPECT_NEAR(zws::residue_inv_chi_at_2(TruncationIndex(n)), want, 1e-12 * std::abs(want)) << n;
    EXPECT_NEAR(zws::residue_inv_chi_at_2_laurent(TruncationIndex(n)), want, 1e-6) << n;
  }
}

TEST(ResidueOfInverseAtTwo, DecaysWithN) {
  const double r2 = std::abs(zws::residue_inv_chi_at_2(TruncationIndex(100)));
  const double r4 = std::abs(zws::residue_inv_chi_at_2(TruncationIndex(10000)));
  EXPECT_LE(r4, 0.1 * r2);
}

TEST(ChiLimits, ProbesBehave) {
  const auto report = zws::chi_limits_check(TruncationIndex(7));
  EXPECT_TRUE(report.pole_order_two);
  EXPECT_TRUE(report.derivative_diverges);
  EXPECT_TRUE(report.double_zero_at_one);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(zws::chi_limits_check(TruncationIndex(12)).value_at_half, ComplexValue(1.0, 0.0));
  EXPECT_LE(zws::chi_limits_check(TruncationIndex(9)).value_near_one, 1e-5);
}

TEST(ChiInteger, MatchesChi) {
  EXPECT_EQ(zws::chi_integer(TruncationIndex(4), 2), 0.0);
  EXPECT_NEAR(zws::chi_integer(TruncationIndex(1), 3), -16.0 / 51.0, 1e-12);
  EXPECT_NEAR(zws::chi_integer(TruncationIndex(1), 3), chi_at(1, 3.0).real(), 1e-12);
  for (std::int64_t n : {1, 2, 5, 17, 40}) {
    for (int order = 2; order <= 12; ++order) {
      const double want = chi_at(n, static_cast<double>(order)).real();
      EXPECT_NEAR(zws::chi_integer(TruncationIndex(n), order), want, 1e-9 * std::max(1.0, std::abs(want)))
          << n << " " << order;
    }
  }
  EXPECT_THROW(zws::chi_integer(TruncationIndex(3), 1), zws::DomainError);
}

TEST(SuccessiveQuotient, ClosedFormAndExtrapolation) {
  const double a2 = std::numbers::ln2 + 2.0 * std::log(1.5);
  EXPECT_NEAR(zws::successive_quotient_limit(TruncationIndex(1)),
              3.0 * (2.0 - a2) / (4.0 * (1.0 - std::numbers::ln2)), 1e-14);
  EXPECT_NEAR(zws::successive_quotient_limit(TruncationIndex(1)), 1.2121184126530578, 1e-14);
  EXPECT_NEAR(zws::successive_quotient_limit(TruncationIndex(5)), 1.0603245715632459, 1e-14);
  EXPECT_NEAR(zws::successive_quotient_extrapolated(TruncationIndex(5)),
              zws::successive_quotient_limit(TruncationIndex(5)), 1e-6);
  EXPECT_LT(std::abs(zws::successive_quotient_limit(TruncationIndex(1000)) - 1.0), 1e-2);
}

TEST(NuResidue, OddAndEven) {
  for (int n : {1, 3, 5, 7, 9, 11}) EXPECT_EQ(zws::nu_residue(n), 0.0);
  EXPECT_NEAR(zws::zeta_derivative_reference(-2.0), -0.030448457058393271, 1e-10);
  EXPECT_NEAR(zws::zeta_derivative_reference(-4.0), 0.0079838114502686243, 1e-10);
  EXPECT_NEAR(zws::nu_residue(2), -4.0 * kPi * kPi, 1e-5 * 4.0 * kPi * kPi);
  EXPECT_NEAR(zws::nu_residue(4), 4.0 * std::pow(kPi, 4) / 3.0, 1e-5 * 130.0);
  EXPECT_THROW(zws::nu_residue(0), zws::DomainError);
  EXPECT_THROW(zws::nu_residue(13), zws::DomainError);
}

TEST(InverseLogFit, RecoversExactModel) {
  const std::array<std::int64_t, 3> ns = {1000, 10000, 100000};
  std::array<double, 3> values{};
  for (std::size_t i = 0; i < 3; ++i) values[i] = 2.0 - 3.0 / (std::log(static_cast<double>(ns[i])) + 1.5);
  const auto fit = zws::extrapolate_inverse_log(ns, values);
  EXPECT_NEAR(fit.limit, 2.0, 1e-9);
  EXPECT_NEAR(fit.scale, -3.0, 1e-8);
  EXPECT_NEAR(fit.shift, 1.5, 1e-8);
}

}  // namespace
