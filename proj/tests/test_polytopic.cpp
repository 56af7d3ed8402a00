#include <gtest/gtest.h>

#include <vector>

#include "stfib/polytopic.hpp"
#include "test_support.hpp"

namespace stfib {
namespace {

mpq_class rat(const SeqValue& v) { return std::get<mpq_class>(v); }

const std::vector<Params>& check_params() {
  static const std::vector<Params> ps = {Params::rational(2, -1), Params::rational(1, 1),  Params::rational(2, 1),
                                         Params::rational(1, 2),  Params::rational(3, -2), Params::rational(4, -1)};
  return ps;
}

// {n+d-1 choose d} as a ratio of products of sequence terms, from a plain loop.
mpq_class simplicial_oracle(long s, long t, long n, long d) {
  auto seq = test::int_sequence(s, t, static_cast<std::size_t>(n + d + 2));
  mpq_class num = 1;
  mpq_class den = 1;
  for (long j = 0; j < d; ++j) {
    num *= seq[static_cast<std::size_t>(n + j)];
    den *= seq[static_cast<std::size_t>(j + 1)];
  }
  mpq_class r = num / den;
  r.canonicalize();
  return r;
}

TEST(Simplicial, FibonacciTriangular) {
  const long expected[] = {0, 1, 2, 6, 15, 40, 104, 273};
  for (long n = 0; n < 8; ++n) EXPECT_EQ(rat(simplicial(n, 2, Params::rational(1, 1))), expected[n]) << n;
}

TEST(Simplicial, JacobsthalTetrahedral) {
  const long expected[] = {1, 5, 55, 385, 3311, 25585};
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(rat(simplicial(n, 3, Params::rational(1, 2))), expected[n - 1]) << n;
}

TEST(Simplicial, ClassicalNumbers) {
  const Params natural = Params::rational(2, -1);
  EXPECT_EQ(rat(simplicial(5, 2, natural)), 15);
  EXPECT_EQ(rat(simplicial(4, 3, natural)), 20);
  EXPECT_EQ(rat(simplicial(3, 4, natural)), 15);
}

TEST(Simplicial, MatchesProductOracle) {
  const long st[][2] = {{2, -1}, {1, 1}, {2, 1}, {1, 2}, {3, -2}, {4, -1}};
  for (const auto& [s, t] : st) {
    auto ctx = make_rational_context(Params::rational(s, t));
    for (long d = 1; d <= 5; ++d) {
      for (long n = 1; n <= 15; ++n) EXPECT_EQ(ctx.simplicial(n, d), simplicial_oracle(s, t, n, d)) << s << t << n << d;
    }
  }
}

TEST(Simplicial, Properties) {
  auto ctx = make_symbolic_context();
  for (long n = 1; n <= 15; ++n) {
    EXPECT_EQ(ctx.simplicial(n, 1), ctx.fib(static_cast<std::size_t>(n)));
    for (long d = 1; d <= 5; ++d) EXPECT_EQ(ctx.simplicial(n, d), ctx.fibonomial(n + d - 1, n - 1));
  }
  for (long d = 1; d <= 8; ++d) EXPECT_EQ(ctx.simplicial(1, d), IntPoly(1));
}

TEST(QAnalog, GaussianBinomialMatchesQContext) {
  auto ctx = make_q_context();
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(qanalog::gauss(n, k), ctx.fibonomial(n, k)) << n << "," << k;
  }
  EXPECT_EQ(qanalog::gauss(4, 2).to_string("q"), "q^4 + q^3 + 2*q^2 + q + 1");
}

TEST(Claims, CatalogIsSortedAndUnique) {
  const auto& all = polytopic_claims();
  ASSERT_FALSE(all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].id, all[i].id);
  for (const auto& c : all) {
    if (c.expected == Expect::discrepant) EXPECT_NO_THROW(find_claim(c.corrected_by)) << c.id;
  }
  EXPECT_THROW(find_claim("no_such_claim"), error);
}

TEST(Claims, SymbolicVerifies) {
  for (const auto& c : polytopic_claims()) {
    if (!c.domain.admits(Params::symbolic())) continue;
    ClaimReport r = claim_eval(c, Params::symbolic(), {12, 4});
    EXPECT_TRUE(r.as_expected()) << c.id << " " << to_string(r.verdict) << " " << r.message;
    EXPECT_GT(r.instances, 0) << c.id;
  }
}

TEST(Claims, RationalSpecializationsVerify) {
  for (const auto& p : check_params()) {
    for (const auto& c : polytopic_claims()) {
      if (!c.domain.admits(p)) continue;
      ClaimReport r = claim_eval(c, p, {25, 6});
      EXPECT_TRUE(r.as_expected()) << c.id << " at " << p.label() << " " << to_string(r.verdict) << " " << r.message;
    }
  }
}

TEST(Claims, SpecialCubeSumsVerify) {
  const char* ids[] = {"cube_sum_fib", "cube_sum_pell", "cube_sum_jacobsthal", "cube_sum_mersenne"};
  for (const char* id : ids) {
    const Claim& c = find_claim(id);
    ClaimReport r = claim_eval(c, *c.domain.only, {25, 1});
    EXPECT_EQ(r.verdict, Verdict::verified) << id;
    EXPECT_EQ(r.instances, 26);
  }
}

TEST(Claims, QSymbolicVerifies) {
  for (const auto& c : polytopic_claims()) {
    if (!c.domain.admits(Params::q_symbolic())) continue;
    ClaimReport r = claim_eval(c, Params::q_symbolic(), {15, 4});
    EXPECT_TRUE(r.as_expected()) << c.id << " " << to_string(r.verdict) << " " << r.message;
  }
}

TEST(Claims, PrintedFormsAreDiscrepantAndCorrectedFormsVerify) {
  for (const char* id : {"gspn_recu2_as_printed", "tetra_reduc2_as_printed"}) {
    const Claim& printed = find_claim(id);
    ClaimReport bad = claim_eval(printed, Params::symbolic(), {8, 4});
    EXPECT_EQ(bad.verdict, Verdict::discrepant) << id;
    EXPECT_FALSE(bad.failures.empty());
    ClaimReport good = claim_eval(find_claim(printed.corrected_by), Params::symbolic(), {8, 4});
    EXPECT_EQ(good.verdict, Verdict::verified) << printed.corrected_by;
  }
}

TEST(Claims, RecurrenceTwoPrintedIndexFailsAtSmallCase) {
  ClaimReport r = claim_eval(find_claim("gspn_recu2_as_printed"), Params::rational(2, -1), {3, 2});
  ASSERT_EQ(r.verdict, Verdict::discrepant);
  // n = 1, d = 1: {2,1} = 2 but the printed index gives 1 + {-1,0} = 1.
  EXPECT_EQ(r.failures.front().at, (Instance{1, 1}));
  EXPECT_EQ(r.failures.front().lhs, "2");
}

TEST(Claims, ClassicalDegeneration) {
  const Params natural = Params::rational(2, -1);
  auto ctx = make_rational_context(natural);
  for (long n = 0; n <= 20; ++n) {
    EXPECT_EQ(ctx.simplicial(n, 2), mpq_class(n * (n + 1) / 2));
    EXPECT_EQ(ctx.simplicial(n, 3), mpq_class(n * (n + 1) * (n + 2) / 6));
  }
  EXPECT_EQ(claim_eval(find_claim("cube_sum"), natural, {20, 1}).verdict, Verdict::verified);
  EXPECT_EQ(claim_eval(find_claim("tri_next"), natural, {20, 1}).verdict, Verdict::verified);
}

TEST(Claims, DomainViolation) {
  EXPECT_THROW(claim_eval(find_claim("warnaar"), Params::symbolic(), {}), error);
  EXPECT_THROW(claim_eval(find_claim("cube_sum_fib"), Params::rational(2, 1), {}), error);
  EXPECT_THROW(claim_eval(find_claim("alt_tri_partial"), Params::symbolic(), {}), error);
  try {
    claim_eval(find_claim("warnaar"), Params::rational(1, 1), {});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), errc::domain_violation);
  }
}

}  // namespace
}  // namespace stfib
