#include "feq/rational.h"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "../support/generators.h"

namespace feq {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("1.25"), Rational(5, 4));
  EXPECT_EQ(Rational::parse("-0.5"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("abc"), std::exception);
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, Sqrt) {
  EXPECT_EQ(Rational(9, 4).sqrt(), Rational(3, 2));
  EXPECT_EQ(Rational(0).sqrt(), Rational(0));
  EXPECT_FALSE(Rational(2).sqrt().has_value());
  EXPECT_FALSE(Rational(-4).sqrt().has_value());
}

TEST(Rational, OrderingAndGcd) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(rational_gcd(Rational(6), Rational(4)), Rational(2));
  EXPECT_EQ(rational_gcd(Rational(1, 2), Rational(1, 3)), Rational(1, 6));
  EXPECT_EQ(rational_gcd(Rational(0), Rational(-3, 2)), Rational(3, 2));
}

// Results stay in lowest terms with a positive denominator; checked against
// cross-multiplied long arithmetic.
TEST(Rational, RandomArithmeticIsCanonical) {
  testing::Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const long a = g.integer(-50, 50), b = g.integer(1, 50), c = g.integer(-50, 50), d = g.integer(1, 50);
    const Rational x(a, b), y(c, d);
    const Rational sum = x + y, product = x * y;
    for (const Rational& r : {sum, product}) {
      EXPECT_GT(r.denominator(), 0);
      const long n = r.numerator().get_si(), m = r.denominator().get_si();
      EXPECT_EQ(std::gcd(n < 0 ? -n : n, m), n == 0 ? m : 1);
    }
    EXPECT_EQ(sum.numerator().get_si() * (b * d), (a * d + c * b) * sum.denominator().get_si());
    EXPECT_EQ(product.numerator().get_si() * (b * d), (a * c) * product.denominator().get_si());
  }
}

}  // namespace
}  // namespace feq
