#include "ammann/golden.hpp"

#include <cmath>
#include <unordered_set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace ammann {
namespace {

using test::G;
using test::Gq;

const Golden phi = Golden::phi();

TEST(Golden, PhiSquared) { EXPECT_EQ(phi * phi, phi + 1); }

TEST(Golden, ProductFormula) {
  // (1 + 2φ)(3 - φ) = 3 - φ + 6φ - 2φ² = 1 + 3φ
  EXPECT_EQ(G(1, 2) * G(3, -1), G(1, 3));
}

TEST(Golden, PowersAreFibonacci) {
  // φ^n = F(n-1) + F(n) φ
  long f0 = 0, f1 = 1;
  Golden p = 1;
  for (int n = 1; n <= 40; ++n) {
    p *= phi;
    EXPECT_EQ(p, G(f0, f1)) << "n = " << n;
    const long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
}

TEST(Golden, InverseOfPhi) {
  EXPECT_EQ(*phi.inverse(), G(-1, 1));
  EXPECT_EQ(*G(2, 1).inverse(), Gq(3, 5, -1, 5));  // (2+φ)(3-φ)/5 = 1
  EXPECT_FALSE(Golden().inverse().has_value());
}

TEST(Golden, ConjugateAndNorm) {
  EXPECT_EQ(phi.conj(), G(1, -1));
  EXPECT_EQ(phi.norm(), Rational(-1));
  EXPECT_EQ(G(3, -1).norm(), Rational(5));  // (3-φ)(2+φ) = 5
  EXPECT_EQ(G(2, 1).conj(), G(3, -1));
}

TEST(Golden, SignIsExact) {
  EXPECT_EQ(G(0, 0).sign(), 0);
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ(G(1, -1).sign(), -1);        // 1 - φ < 0
  EXPECT_EQ(G(-1, 1).sign(), 1);         // φ - 1 > 0
  EXPECT_EQ(G(-3, 2).sign(), 1);         // 2φ - 3 ≈ 0.236
  EXPECT_EQ(G(13, -8).sign(), 1);        // 13 - 8φ ≈ 0.056
  EXPECT_EQ(G(-21, 13).sign(), 1);       // 13φ - 21 ≈ 0.034
  EXPECT_EQ(G(21, -13).sign(), -1);
  // F(n+1) - F(n)φ = (1 - φ)^n, tiny and alternating in sign.
  EXPECT_EQ(G(-832040, 514229).sign(), 1);
  EXPECT_EQ(G(-1346269, 832040).sign(), -1);
}

TEST(Golden, SignWithSqrt5) {
  EXPECT_EQ(sign_with_sqrt5(Rational(-2), Rational(1)), 1);
  EXPECT_EQ(sign_with_sqrt5(Rational(-3), Rational(1)), -1);
  EXPECT_EQ(sign_with_sqrt5(Rational(9, 4), Rational(-1)), 1);
  EXPECT_EQ(sign_with_sqrt5(Rational(0), Rational(0)), 0);
}

TEST(Golden, RealOrder) {
  EXPECT_LT(G(1, 0), phi);
  EXPECT_LT(phi, G(2, 0));
  EXPECT_LT(G(1, -1), G(0, 0));
  EXPECT_EQ(G(1, 1) <=> G(1, 1), std::strong_ordering::equal);
  EXPECT_EQ(abs(G(1, -1)), G(-1, 1));
}

TEST(Golden, DivisionByZero) {
  EXPECT_THROW(phi / Golden(), DivisionByZero);
  EXPECT_FALSE(checked_div(phi, Golden()).has_value());
  EXPECT_EQ(*checked_div(G(1, 2), G(1, 2)), Golden(1));
}

TEST(Golden, Embedding) {
  const double s5 = std::sqrt(5.0);
  const auto [hi, lo] = phi.embed();
  EXPECT_NEAR(hi, (1 + s5) / 2, 1e-15);
  EXPECT_NEAR(lo, (1 - s5) / 2, 1e-15);
  EXPECT_NEAR(G(4, -2).to_double(), 2 / (hi * hi), 1e-14);
}

TEST(Golden, StringForm) {
  EXPECT_EQ(G(4, -2).str(), "4 - 2φ");
  EXPECT_EQ(phi.str(), "φ");
  EXPECT_EQ((-phi).str(), "-φ");
  EXPECT_EQ(Golden().str(), "0");
  EXPECT_EQ(Gq(-1, 2, 3, 2).str(), "-1/2 + 3/2φ");
}

TEST(Golden, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Golden, FromFractionsRejectsZeroDenominator) {
  EXPECT_THROW(Golden::from_fractions(1, 0, 1, 1), DivisionByZero);
  EXPECT_EQ(Golden::from_fractions(2, 4, 3, 6), Gq(1, 2, 1, 2));
}

TEST(Golden, HashConsistentWithEquality) {
  std::unordered_set<Golden> s{G(1, 1), Gq(2, 2, 3, 3), phi * phi, G(2, 1)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(GoldenProperty, FieldAxioms) {
  test::GoldenSampler S(0x51a7);
  for (int i = 0; i < 2000; ++i) {
    const Golden x = S.golden(), y = S.golden(), z = S.golden();
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x - x, Golden());
    if (!x.is_zero()) ASSERT_EQ(x * *x.inverse(), Golden(1));
  }
}

TEST(GoldenProperty, ConjugationIsRingAutomorphism) {
  test::GoldenSampler S(0xc0f1);
  for (int i = 0; i < 2000; ++i) {
    const Golden x = S.golden(), y = S.golden();
    ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ(x.conj().conj(), x);
    ASSERT_EQ(x * x.conj(), Golden(x.norm()));
  }
}

TEST(GoldenProperty, SignAgreesWithFloatAwayFromZero) {
  test::GoldenSampler S(0x5e9);
  for (int i = 0; i < 2000; ++i) {
    const Golden x = S.golden(50);
    const double d = x.to_double();
    if (std::abs(d) < 1e-9) continue;
    ASSERT_EQ(x.sign(), d > 0 ? 1 : -1) << x.str();
  }
}

TEST(GoldenProperty, OrderIsTotalAndCompatible) {
  test::GoldenSampler S(0x0d3);
  for (int i = 0; i < 1000; ++i) {
    const Golden x = S.golden(), y = S.golden(), z = S.golden();
    ASSERT_EQ(x < y, (y - x).sign() > 0);
    if (x < y) ASSERT_LT(x + z, y + z);
  }
}

}  // namespace
}  // namespace ammann
