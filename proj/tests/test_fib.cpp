#include <gtest/gtest.h>

#include <vector>

#include "stfib/fib.hpp"
#include "stfib/registry.hpp"
#include "test_support.hpp"

namespace stfib {
namespace {

const IntPoly s = IntPoly::s();
const IntPoly t = IntPoly::t();

mpq_class rat(const SeqValue& v) { return std::get<mpq_class>(v); }
IntPoly poly(const SeqValue& v) { return std::get<IntPoly>(v); }

const std::vector<Params>& registry_params() {
  static const std::vector<Params> ps = {
      Params::rational(2, -1), Params::rational(1, 1),  Params::rational(2, 1), Params::rational(1, 2),
      Params::rational(3, -2), Params::rational(4, -1), Params::rational(mpq_class(3, 2), mpq_class(-1, 3))};
  return ps;
}

TEST(Fib, FibonacciNumbers) {
  const long expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(rat(fib(n, Params::rational(1, 1))), expected[n]);
}

TEST(Fib, PositiveIntegersAndMersenne) {
  EXPECT_EQ(rat(fib(7, Params::rational(2, -1))), 7);
  EXPECT_EQ(rat(fib(5, Params::rational(3, -2))), 31);
}

TEST(Fib, SymbolicLowOrders) {
  EXPECT_EQ(poly(fib(0, Params::symbolic())), IntPoly());
  EXPECT_EQ(poly(fib(3, Params::symbolic())), s.pow(2) + t);
  EXPECT_EQ(to_string(fib(4, Params::symbolic())), "s^3 + 2*s*t");
}

TEST(Fib, QSymbolicIsQNumber) {
  // [n]_q = 1 + q + ... + q^{n-1}
  IntPoly q = IntPoly::s();
  IntPoly expected;
  for (int n = 1; n <= 10; ++n) {
    expected += q.pow(n - 1);
    EXPECT_EQ(poly(fib(n, Params::q_symbolic())), expected);
  }
}

TEST(Lucas, MatchesTraceOfPhiPowers) {
  // Oracle: phi^n + phi'^n computed by repeated QuadRing multiplication.
  QuadRing<mpq_class> ring(1, 1);
  const long expected[] = {2, 1, 3, 4, 7, 11};
  for (unsigned n = 0; n <= 5; ++n) {
    auto sum = ring.pow(ring.phi(), n) + ring.pow(ring.phi_conj(), n);
    ASSERT_TRUE(sum.in_base_ring());
    EXPECT_EQ(sum.a, expected[n]);
    EXPECT_EQ(rat(lucas(n, Params::rational(1, 1))), expected[n]);
  }
}

TEST(Lucas, SymbolicAndMersenne) {
  EXPECT_EQ(poly(lucas(2, Params::symbolic())), s.pow(2) + IntPoly(2) * t);
  EXPECT_EQ(rat(lucas(4, Params::rational(3, -2))), 17);
}

TEST(PhiPow, LowPowers) {
  EXPECT_EQ(phi_pow(0), QuadElem<IntPoly>(IntPoly(1)));
  EXPECT_EQ(phi_pow(2), QuadElem<IntPoly>(t, s));
  QuadElem<IntPoly> five{s.pow(3) * t + IntPoly(2) * s * t.pow(2), s.pow(4) + IntPoly(3) * s.pow(2) * t + t.pow(2)};
  EXPECT_EQ(phi_pow(5), five);
}

TEST(Fibotorial, Values) {
  EXPECT_EQ(rat(fibotorial(0, Params::rational(1, 1))), 1);
  EXPECT_EQ(poly(fibotorial(0, Params::symbolic())), IntPoly(1));
  EXPECT_EQ(rat(fibotorial(5, Params::rational(1, 1))), 30);
  EXPECT_EQ(rat(fibotorial(4, Params::rational(2, -1))), 24);
}

TEST(Fibonomial, Values) {
  EXPECT_EQ(rat(fibonomial(4, 2, Params::rational(1, 1))), 6);
  for (long n = 0; n < 8; ++n) EXPECT_EQ(poly(fibonomial(n, 0, Params::symbolic())), IntPoly(1));
  EXPECT_EQ(poly(fibonomial(3, 1, Params::symbolic())), s.pow(2) + t);
  EXPECT_EQ(poly(fibonomial(4, 2, Params::symbolic())), (s.pow(2) + t) * (s.pow(2) + IntPoly(2) * t));
}

TEST(Fibonomial, OutOfRangeIsZero) {
  EXPECT_EQ(poly(fibonomial(3, -1, Params::symbolic())), IntPoly());
  EXPECT_EQ(poly(fibonomial(3, 4, Params::symbolic())), IntPoly());
  EXPECT_EQ(rat(fibonomial(-2, 1, Params::rational(1, 1))), 0);
}

TEST(Fibonomial, IntegerOracleAtRegistryPoints) {
  // Oracle: integer products of directly looped sequence values.
  for (auto [s0, t0] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}, {3L, -2L}, {4L, -1L}, {2L, -1L}}) {
    auto seq = test::int_sequence(s0, t0, 22);
    std::vector<mpz_class> fact{1};
    for (std::size_t n = 1; n < seq.size(); ++n) fact.push_back(fact.back() * seq[n]);
    auto ctx = make_rational_context(Params::rational(s0, t0));
    for (long n = 0; n < 22; ++n) {
      for (long k = 0; k <= n; ++k) {
        mpz_class expected = fact[n] / (fact[k] * fact[n - k]);
        EXPECT_EQ(ctx.fibonomial(n, k), expected) << s0 << "," << t0 << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(SpecLookup, Registry) {
  EXPECT_EQ(spec_lookup("pell"), Params::rational(2, 1));
  EXPECT_EQ(spec_lookup("fibonacci"), Params::rational(1, 1));
  EXPECT_EQ(spec_lookup("jacobsthal"), Params::rational(1, 2));
  EXPECT_EQ(spec_lookup("mersenne"), Params::rational(3, -2));
  EXPECT_EQ(spec_lookup("natural"), Params::rational(2, -1));
  const mpq_class q(3, 5);
  const mpq_class pq_args[] = {1, q};
  EXPECT_EQ(spec_lookup("pq", pq_args), Params::rational(1 + q, -q));
  const mpq_class q_args[] = {q};
  EXPECT_EQ(spec_lookup("qnumber", q_args), Params::rational(1 + q, -q));
  const mpq_class tau[] = {2};
  EXPECT_EQ(spec_lookup("chebyshev", tau), Params::rational(4, -1));
  try {
    (void)spec_lookup("lucas");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errc::unknown_name);
  }
  EXPECT_THROW((void)spec_lookup("chebyshev"), error);
  EXPECT_EQ(find_spec("fibonacci").triangular_oeis, "A001654");
}

TEST(FibProperty, RecurrenceHoldsEverywhere) {
  auto sym = make_symbolic_context();
  for (std::size_t n = 0; n + 2 <= 40; ++n) EXPECT_EQ(sym.fib(n + 2), s * sym.fib(n + 1) + t * sym.fib(n));
  for (const Params& p : registry_params()) {
    auto ctx = make_rational_context(p);
    for (std::size_t n = 0; n + 2 <= 40; ++n) EXPECT_EQ(ctx.fib(n + 2), p.s0 * ctx.fib(n + 1) + p.t0 * ctx.fib(n));
  }
}

TEST(FibProperty, SpecializationCommutes) {
  auto sym = make_symbolic_context();
  for (const Params& p : registry_params()) {
    auto ctx = make_rational_context(p);
    for (std::size_t n = 0; n <= 40; ++n) {
      EXPECT_EQ(sym.fib(n).evaluate(p.s0, p.t0), ctx.fib(n)) << p.label() << " n=" << n;
      EXPECT_EQ(sym.lucas(n).evaluate(p.s0, p.t0), ctx.lucas(n)) << p.label() << " n=" << n;
    }
  }
}

TEST(FibProperty, PhiPowersAndLucasTrace) {
  auto sym = make_symbolic_context();
  const auto& ring = sym.ring();
  for (std::size_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(sym.phi_pow(n), QuadElem<IntPoly>(t * sym.fib(n - 1), sym.fib(n))) << n;
  }
  for (std::size_t n = 0; n <= 40; ++n) {
    auto sum = sym.phi_pow(n) + sym.phi_conj_pow(n);
    ASSERT_TRUE(sum.in_base_ring());
    EXPECT_EQ(sum.a, sym.lucas(n)) << n;
    EXPECT_EQ(ring.pow(ring.phi(), static_cast<unsigned>(n)), sym.phi_pow(n));
  }
}

TEST(FibProperty, FibonomialRoutesAgreeSymbolically) {
  auto sym = make_symbolic_context();
  for (long n = 1; n <= 25; ++n) {
    for (long k = 1; k <= n; ++k) {
      IntPoly by_division = sym.fibonomial_by_division(n, k);
      const auto& p1 = sym.fibonomial_by_pascal(n, k, PascalForm::phi_first);
      const auto& p2 = sym.fibonomial_by_pascal(n, k, PascalForm::phi_conj_first);
      ASSERT_TRUE(p1.in_base_ring()) << n << "," << k;
      ASSERT_TRUE(p2.in_base_ring()) << n << "," << k;
      EXPECT_EQ(p1.a, by_division) << n << "," << k;
      EXPECT_EQ(p2.a, by_division) << n << "," << k;
    }
  }
}

}  // namespace
}  // namespace stfib
