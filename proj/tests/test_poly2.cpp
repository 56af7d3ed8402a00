#include <gtest/gtest.h>

#include <random>

#include "stfib/poly2.hpp"
#include "test_support.hpp"

namespace stfib {
namespace {

const IntPoly s = IntPoly::s();
const IntPoly t = IntPoly::t();

TEST(Poly2, Cancellation) { EXPECT_EQ((s + t) + (s - t), IntPoly(2) * s); }

TEST(Poly2, CommutativityCancels) {
  IntPoly d = s * t - t * s;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.size(), 0U);
}

TEST(Poly2, MultiplicativeIdentity) { EXPECT_EQ((s.pow(2) + t) * IntPoly(1), s.pow(2) + t); }

TEST(Poly2, NoStoredZeros) {
  IntPoly p = s * s + t - t;
  for (const auto& [m, c] : p.terms()) EXPECT_NE(c, 0);
  EXPECT_EQ(p.size(), 1U);
}

TEST(Poly2, CanonicalString) {
  EXPECT_EQ((s.pow(3) + IntPoly(2) * s * t).to_string(), "s^3 + 2*s*t");
  EXPECT_EQ((t - s.pow(2)).to_string(), "-s^2 + t");
  EXPECT_EQ(IntPoly().to_string(), "0");
  EXPECT_EQ((IntPoly(1) - s).to_string("q", "_"), "-q + 1");
}

TEST(Poly2, Evaluate) {
  IntPoly p = s.pow(3) + IntPoly(2) * s * t;  // {4}
  EXPECT_EQ(p.evaluate(1, 1), 3);
  EXPECT_EQ(p.evaluate(mpq_class(1, 2), 3), mpq_class(1, 8) + 3);
}

TEST(Poly2Division, UnitDivisor) { EXPECT_EQ(exact_div(s.pow(2) + t, IntPoly(1)), s.pow(2) + t); }

TEST(Poly2Division, FibonomialFourTwo) {
  // {4}! / ({2}! {2}!) with {1}=1, {2}=s, {3}=s^2+t, {4}=s^3+2st, expanded by hand.
  IntPoly f3 = s.pow(2) + t;
  IntPoly f4 = s.pow(3) + IntPoly(2) * s * t;
  IntPoly num = s * f3 * f4;
  IntPoly den = s * s;
  EXPECT_EQ(exact_div(num, den), (s.pow(2) + t) * (s.pow(2) + IntPoly(2) * t));
}

TEST(Poly2Division, NotDivisible) {
  try {
    (void)exact_div(s, t);
    FAIL() << "expected NotDivisible";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errc::not_divisible);
  }
  EXPECT_FALSE(try_exact_div(IntPoly(3) * s, IntPoly(2)).has_value());
  EXPECT_TRUE(try_exact_div(RatPoly(mpq_class(3)) * RatPoly::s(), RatPoly(mpq_class(2))).has_value());
}

TEST(Poly2Division, ByZeroIsDomainError) {
  EXPECT_THROW((void)exact_div(s, IntPoly()), error);
}

TEST(Poly2Property, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = test::random_poly(rng);
    IntPoly b = test::random_poly(rng);
    IntPoly c = test::random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Poly2Property, ExactDivisionRecoversFactor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = test::random_poly(rng);
    IntPoly b = test::random_poly(rng);
    if (b.is_zero()) continue;
    IntPoly q = exact_div(a * b, b);
    EXPECT_EQ(q * b, a * b);
    EXPECT_EQ(q, a);
  }
}

TEST(Poly2Property, RationalCoefficients) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = test::random_poly(rng);
    RatPoly ra;
    for (const auto& [m, c] : a.terms()) ra += RatPoly::monomial(mpq_class(c, 3), m.s, m.t);
    RatPoly den = RatPoly::s() + RatPoly(mpq_class(1, 2));
    EXPECT_EQ(exact_div(ra * den, den), ra);
  }
}

}  // namespace
}  // namespace stfib
