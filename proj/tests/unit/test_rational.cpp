#include <gtest/gtest.h>

#include <random>

#include "zws/rational.hpp"
#include "zws/types.hpp"

namespace {

using zws::BigInt;
using zws::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).den(), BigInt(1));
}

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(Rational::parse("-691/2730").to_string(), "-691/2730");
  EXPECT_EQ(Rational::parse("4/2").to_string(), "2");
  EXPECT_EQ(Rational::parse("0").to_string(), "0");
  EXPECT_THROW(Rational::parse("1/"), zws::DomainError);
  EXPECT_THROW(Rational::parse("a/3"), zws::DomainError);
  EXPECT_THROW(Rational::parse("1/0"), zws::DomainError);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  auto draw = [&] {
    std::int64_t d = 0;
    while (d == 0) d = dist(rng);
    return Rational(BigInt(dist(rng)), BigInt(d));
  };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    const Rational c = draw();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
    EXPECT_EQ(a < b, a.to_double() < b.to_double() || (a < b && a.to_double() == b.to_double()));
  }
}

TEST(Rational, ToDoubleHandlesHugeParts) {
  const BigInt big = pow(BigInt(10), 400);
  EXPECT_DOUBLE_EQ(Rational(big, big * 3).to_double(), 1.0 / 3.0);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(zws::binomial(11, 5), BigInt(462));
  EXPECT_EQ(zws::binomial(5, 7), BigInt(0));
  EXPECT_EQ(zws::binomial(0, 0), BigInt(1));
}

}  // namespace
