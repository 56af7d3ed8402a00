#include <gtest/gtest.h>

#include <random>

#include "stfib/series.hpp"
#include "test_support.hpp"

namespace stfib {
namespace {

using SymSeries = SeriesQuad<IntPoly>;
using RatSeries = SeriesQuad<mpq_class>;

QuadRing<IntPoly> sym_ring() { return make_symbolic_context().ring(); }

SymSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant = false) {
  const auto ring = sym_ring();
  SymSeries f(ring, order);
  for (std::size_t k = 0; k < order; ++k) {
    f.set(k, {test::random_poly(rng, 2, 3, 4), test::random_poly(rng, 2, 2, 4)});
  }
  if (unit_constant) f.set(0, ring.embed(IntPoly((rng() & 1U) != 0 ? 1 : -1)));
  return f;
}

TEST(Series, GeometricInverse) {
  const auto ring = sym_ring();
  auto prod = SymSeries::one_minus(ring, ring.one(), 12) * SymSeries::geometric(ring, 12);
  SymSeries one(ring, 12);
  one.set(0, ring.one());
  EXPECT_EQ(prod, one);
  EXPECT_EQ(one.inverse(), one);
}

TEST(Series, ScaleAndNonUnit) {
  const auto ring = sym_ring();
  auto f = SymSeries::one_minus(ring, -ring.one(), 3);  // 1 + x
  auto g = f.scaled(ring.phi());
  EXPECT_EQ(g[0], ring.phi());
  EXPECT_EQ(g[1], ring.phi());
  SymSeries h(ring, 4);
  h.set(0, ring.embed(IntPoly::s()));
  try {
    h.inverse();
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errc::non_unit_constant_term);
  }
  EXPECT_THROW(f + SymSeries(ring, 4), error);
}

TEST(Series, DerivativeOfMonomials) {
  const auto ring = sym_ring();
  SymSeries x2(ring, 5);
  x2.set(2, ring.one());
  auto d = pderiv(x2);
  EXPECT_EQ(d.order(), 4U);
  EXPECT_EQ(d[1], ring.embed(IntPoly::s()));
  EXPECT_EQ(d[0], ring.zero());

  SymSeries c(ring, 5);
  c.set(0, ring.phi());
  EXPECT_EQ(pderiv(c), SymSeries(ring, 4));

  auto ctx = make_symbolic_context();
  auto dg = pderiv(SymSeries::geometric(ring, 10));
  for (std::size_t n = 0; n < 9; ++n) EXPECT_EQ(dg[n], ring.embed(ctx.fib(n + 1)));
}

TEST(Series, PochhammerBaseCases) {
  auto ctx = make_symbolic_context();
  const auto& ring = ctx.ring();
  EXPECT_EQ(pochhammer_series(ring, 0, 1, 10), SymSeries::geometric(ring, 10));
  auto p = pochhammer_series(ring, 1, 2, 10);
  for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(p[n], ring.embed(ctx.fib(n + 1)));
  auto p2 = pochhammer_series(ring, 2, 3, 10);
  for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(p2[n], ring.embed(ctx.simplicial(static_cast<long>(n) + 1, 2)));
  EXPECT_THROW(pochhammer_series(ring, 1, 3, 10), error);
}

TEST(Series, ProductRulesHold) {
  std::mt19937_64 rng(20240611);
  const auto ring = sym_ring();
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t order = 3 + static_cast<std::size_t>(trial % 8);
    SymSeries f = random_series(rng, order);
    SymSeries g = random_series(rng, order);
    const std::size_t m = order - 1;
    SymSeries lhs = pderiv(f * g);
    SymSeries df = pderiv(f);
    SymSeries dg = pderiv(g);
    SymSeries first = f.scale_arg(ring.phi()).truncated(m) * dg + g.scale_arg(ring.phi_conj()).truncated(m) * df;
    SymSeries second = f.scale_arg(ring.phi_conj()).truncated(m) * dg + g.scale_arg(ring.phi()).truncated(m) * df;
    EXPECT_EQ(lhs, first) << trial;
    EXPECT_EQ(lhs, second) << trial;
  }
}

TEST(Series, QuotientRuleHolds) {
  std::mt19937_64 rng(77);
  const auto ring = sym_ring();
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t order = 3 + static_cast<std::size_t>(trial % 6);
    SymSeries f = random_series(rng, order);
    SymSeries g = random_series(rng, order, true);
    const std::size_t m = order - 1;
    SymSeries lhs = pderiv(f * g.inverse());
    SymSeries g_phi = g.scale_arg(ring.phi()).truncated(m);
    SymSeries g_conj = g.scale_arg(ring.phi_conj()).truncated(m);
    SymSeries rhs = (g_phi * pderiv(f) - f.scale_arg(ring.phi()).truncated(m) * pderiv(g)) * (g_phi * g_conj).inverse();
    EXPECT_EQ(lhs, rhs) << trial;
  }
}

TEST(Series, NthDerivativeOfGeometric) {
  EXPECT_EQ(check_nderiv_geo(1, 12, Params::symbolic()).verdict, Verdict::verified);
  EXPECT_EQ(check_nderiv_geo(3, 12, Params::symbolic()).verdict, Verdict::verified);
  EXPECT_EQ(check_nderiv_geo(3, 20, Params::rational(1, 1)).verdict, Verdict::verified);
  EXPECT_EQ(check_nderiv_geo(5, 20, Params::rational(3, -2)).verdict, Verdict::verified);
  EXPECT_EQ(check_nderiv_geo(4, 15, Params::q_symbolic()).verdict, Verdict::verified);
  EXPECT_THROW(check_nderiv_geo(3, 7, Params::symbolic()), error);
}

TEST(Series, PolytopicGeneratingFunction) {
  for (long d = 1; d <= 4; ++d) {
    EXPECT_EQ(check_gf_polytopic(d, 12, Params::symbolic()).verdict, Verdict::verified) << d;
    EXPECT_EQ(check_gf_polytopic(d, 12, Params::q_symbolic()).verdict, Verdict::verified) << d;
    for (const auto& p : {Params::rational(2, -1), Params::rational(1, 1), Params::rational(2, 1), Params::rational(1, 2),
                          Params::rational(3, -2)}) {
      EXPECT_EQ(check_gf_polytopic(d, 30, p).verdict, Verdict::verified) << d << p.label();
    }
  }
}

TEST(Series, PolytopicCoefficientValues) {
  auto fctx = make_rational_context(Params::rational(1, 1));
  auto golden = pochhammer_series(fctx.ring(), 2, 3, 6);
  const long rect[] = {1, 2, 6, 15, 40, 104};
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(golden[n], fctx.ring().embed(mpq_class(rect[n])));

  auto pctx = make_rational_context(Params::rational(2, 1));
  auto pell = pochhammer_series(pctx.ring(), 3, 4, 4);
  const long tetra[] = {1, 12, 174, 2436};
  for (std::size_t n = 0; n < 4; ++n) EXPECT_EQ(pell[n], pctx.ring().embed(mpq_class(tetra[n])));

  auto nctx = make_rational_context(Params::rational(2, -1));
  auto classical = pochhammer_series(nctx.ring(), 3, 4, 8);
  for (long n = 0; n < 8; ++n) EXPECT_EQ(classical[static_cast<std::size_t>(n)].a, mpq_class((n + 1) * (n + 2) * (n + 3) / 6));
}

TEST(Series, SquaredTriangularGeneratingFunction) {
  EXPECT_EQ(check_gf_tri_squared(8, Params::symbolic()).verdict, Verdict::verified);
  EXPECT_EQ(check_gf_tri_squared(12, Params::q_symbolic()).verdict, Verdict::verified);
  for (const auto& p : {Params::rational(2, -1), Params::rational(1, 1), Params::rational(2, 1), Params::rational(1, 2),
                        Params::rational(3, -2), Params::rational(mpq_class(3, 2), mpq_class(1, 3))}) {
    EXPECT_EQ(check_gf_tri_squared(40, p).verdict, Verdict::verified) << p.label();
  }
  auto ctx = make_rational_context(Params::rational(1, 1));
  auto gf = tri_squared_gf(ctx, 8);
  const long squares[] = {0, 1, 4, 36, 225, 1600, 10816, 74529};
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(gf[n], ctx.ring().embed(mpq_class(squares[n]))) << n;
  auto nctx = make_rational_context(Params::rational(2, -1));
  auto classical = tri_squared_gf(nctx, 8);
  const long tri_sq[] = {0, 1, 9, 36, 100, 225, 441, 784};
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(classical[n], nctx.ring().embed(mpq_class(tri_sq[n]))) << n;
  EXPECT_THROW(check_gf_tri_squared(7, Params::symbolic()), error);
}

TEST(Series, SpecializationCommutes) {
  auto sym = make_symbolic_context();
  auto symbolic_gf = tri_squared_gf(sym, 10);
  auto symbolic_poch = pochhammer_series(sym.ring(), 3, 4, 10);
  for (const auto& p : {Params::rational(1, 1), Params::rational(3, -2)}) {
    auto ctx = make_rational_context(p);
    auto numeric_gf = tri_squared_gf(ctx, 10);
    auto numeric_poch = pochhammer_series(ctx.ring(), 3, 4, 10);
    for (std::size_t n = 0; n < 10; ++n) {
      QuadElem<mpq_class> a{symbolic_gf[n].a.evaluate(p.s0, p.t0), symbolic_gf[n].b.evaluate(p.s0, p.t0)};
      QuadElem<mpq_class> b{symbolic_poch[n].a.evaluate(p.s0, p.t0), symbolic_poch[n].b.evaluate(p.s0, p.t0)};
      EXPECT_EQ(a, numeric_gf[n]) << p.label() << n;
      EXPECT_EQ(b, numeric_poch[n]) << p.label() << n;
    }
  }
}

TEST(Series, DefaultOrders) {
  EXPECT_EQ(default_series_order(Params::symbolic()), 25U);
  EXPECT_EQ(default_series_order(Params::rational(1, 1)), 40U);
}

}  // namespace
}  // namespace stfib
