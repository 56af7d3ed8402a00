#pragma once

// Generalized simplicial d-polytopic numbers and the catalog of identities
// they satisfy, each expressed as a Claim.

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "stfib/claims.hpp"
#include "stfib/fib.hpp"
#include "stfib/registry.hpp"

namespace stfib {

/// {n+d-1 choose d}: the n-th generalized simplicial d-polytopic number.
inline SeqValue simplicial(long n, long d, const Params& p) {
  return detail::seq_value(p, [&](auto& ctx) { return ctx.simplicial(n, d); });
}

namespace qanalog {

// Polynomials in q, held in the first slot of an IntPoly.
inline IntPoly q_pow(unsigned e) { return IntPoly::monomial(mpz_class(1), e, 0); }

/// 1 - q^e
inline IntPoly one_minus_q_pow(unsigned e) { return IntPoly(1) - q_pow(e); }

/// (1 - q^n) / (1 - q), by exact division.
inline IntPoly q_int(long n) { return exact_div(one_minus_q_pow(static_cast<unsigned>(n)), one_minus_q_pow(1)); }

/// Gaussian binomial [n choose k]_q from the q-Pascal rule
/// [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k].
inline IntPoly gauss(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  std::vector<IntPoly> row{IntPoly(1)};
  for (long m = 1; m <= n; ++m) {
    std::vector<IntPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = IntPoly(1);
    next[static_cast<std::size_t>(m)] = IntPoly(1);
    for (long j = 1; j < m; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      next[uj] = row[uj - 1] + q_pow(static_cast<unsigned>(j)) * row[uj];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace qanalog

namespace detail {

template <class Ctx>
using scalar_of = typename std::remove_reference_t<Ctx>::scalar;

/// Complete homogeneous sum a^{k-1} + a^{k-2} b + ... + b^{k-1} in R[phi].
template <class R>
QuadElem<R> divided_power_sum(const QuadRing<R>& ring, const QuadElem<R>& a, const QuadElem<R>& b, long k) {
  QuadElem<R> acc;
  for (long j = 0; j < k; ++j) {
    acc += ring.mul(ring.pow(a, static_cast<unsigned>(j)), ring.pow(b, static_cast<unsigned>(k - 1 - j)));
  }
  return acc;
}

}  // namespace detail

inline std::vector<Claim> build_polytopic_claims() {
  using detail::scalar_of;
  std::vector<Claim> claims;

  ClaimDomain n0;  // n >= 0
  ClaimDomain n1;
  n1.n_min = 1;
  ClaimDomain nk;  // n >= 1, 1 <= k <= n
  nk.n_min = 1;
  nk.uses_d = true;
  nk.d_at_most_n = true;
  ClaimDomain nd0;  // n >= 0, d >= 1
  nd0.uses_d = true;
  ClaimDomain nd1 = nd0;
  nd1.n_min = 1;

  auto base = [](auto& c, auto x) { return c.ring().embed(std::move(x)); };

  // Pascal recurrences for fibonomials; fibonomials are taken from the
  // division route so the table construction is not checked against itself.
  claims.push_back(make_claim(
      "pascal1", "{n+1,k} = phi^k {n,k} + phi'^(n+1-k) {n,k-1}", "Pascal recurrence, phi-first form", nk,
      [](auto& c, Instance i) { return c.fibonomial_by_division(i.n + 1, i.d); },
      [base](auto& c, Instance i) {
        const auto& r = c.ring();
        return r.mul(c.phi_pow(i.d), base(c, c.fibonomial_by_division(i.n, i.d))) +
               r.mul(c.phi_conj_pow(i.n + 1 - i.d), base(c, c.fibonomial_by_division(i.n, i.d - 1)));
      }));
  claims.push_back(make_claim(
      "pascal2", "{n+1,k} = phi'^k {n,k} + phi^(n+1-k) {n,k-1}", "Pascal recurrence, phi'-first form", nk,
      [](auto& c, Instance i) { return c.fibonomial_by_division(i.n + 1, i.d); },
      [base](auto& c, Instance i) {
        const auto& r = c.ring();
        return r.mul(c.phi_conj_pow(i.d), base(c, c.fibonomial_by_division(i.n, i.d))) +
               r.mul(c.phi_pow(i.n + 1 - i.d), base(c, c.fibonomial_by_division(i.n, i.d - 1)));
      }));

  claims.push_back(make_claim(
      "gspn_recu1", "{n+d,d} = phi^d {n+d-1,d} + phi'^n {n+d-1,d-1}", "d-polytopic recurrence, phi-first form", nd0,
      [](auto& c, Instance i) { return c.fibonomial(i.n + i.d, i.d); },
      [base](auto& c, Instance i) {
        const auto& r = c.ring();
        return r.mul(c.phi_pow(i.d), base(c, c.fibonomial(i.n + i.d - 1, i.d))) +
               r.mul(c.phi_conj_pow(i.n), base(c, c.fibonomial(i.n + i.d - 1, i.d - 1)));
      }));
  claims.push_back(make_claim(
      "gspn_recu2", "{n+d,d} = phi'^d {n+d-1,d} + phi^n {n+d-1,d-1}", "d-polytopic recurrence, phi'-first form", nd0,
      [](auto& c, Instance i) { return c.fibonomial(i.n + i.d, i.d); },
      [base](auto& c, Instance i) {
        const auto& r = c.ring();
        return r.mul(c.phi_conj_pow(i.d), base(c, c.fibonomial(i.n + i.d - 1, i.d))) +
               r.mul(c.phi_pow(i.n), base(c, c.fibonomial(i.n + i.d - 1, i.d - 1)));
      }));
  claims.push_back(expect_discrepant(
      make_claim(
          "gspn_recu2_as_printed", "{n+d,d} = phi'^d {n+d-1,d} + phi^n {n-d-1,d-1} (index as printed)",
          "d-polytopic recurrence, phi'-first form, printed index", nd1,
          [](auto& c, Instance i) { return c.fibonomial(i.n + i.d, i.d); },
          [base](auto& c, Instance i) {
            const auto& r = c.ring();
            return r.mul(c.phi_conj_pow(i.d), base(c, c.fibonomial(i.n + i.d - 1, i.d))) +
                   r.mul(c.phi_pow(i.n), base(c, c.fibonomial(i.n - i.d - 1, i.d - 1)));
          }),
      "gspn_recu2"));

  auto reduc = [base](bool phi_first) {
    return [base, phi_first](auto& c, Instance i) {
      const auto& r = c.ring();
      QuadElem<scalar_of<decltype(c)>> acc;
      for (long k = 1; k <= i.n; ++k) {
        const std::size_t big = static_cast<std::size_t>((i.d + 1) * (i.n - k));
        const std::size_t small = static_cast<std::size_t>(k - 1);
        auto weight = phi_first ? r.mul(c.phi_pow(big), c.phi_conj_pow(small))
                                : r.mul(c.phi_conj_pow(big), c.phi_pow(small));
        acc += r.mul(weight, base(c, c.simplicial(k, i.d)));
      }
      return acc;
    };
  };
  claims.push_back(make_claim("reduc_sum1", "{n+d,d+1} = sum_k phi^((d+1)(n-k)) phi'^(k-1) {k+d-1,d}",
                              "sum of d-polytopic numbers, phi-first form", nd1,
                              [](auto& c, Instance i) { return c.fibonomial(i.n + i.d, i.d + 1); }, reduc(true)));
  claims.push_back(make_claim("reduc_sum2", "{n+d,d+1} = sum_k phi'^((d+1)(n-k)) phi^(k-1) {k+d-1,d}",
                              "sum of d-polytopic numbers, phi'-first form", nd1,
                              [](auto& c, Instance i) { return c.fibonomial(i.n + i.d, i.d + 1); }, reduc(false)));
  claims.push_back(expect_discrepant(
      make_claim("tetra_reduc2_as_printed", "{n+3,3} = sum_k phi'^(3(n-k)) phi^(k-1) {k+1,2} (upper index as printed)",
                 "tetrahedral sum, phi'-first form, printed index", n1,
                 [](auto& c, Instance i) { return c.fibonomial(i.n + 3, 3); },
                 [reduc](auto& c, Instance i) { return reduc(false)(c, Instance{i.n, 2}); }),
      "reduc_sum2"));

  claims.push_back(make_q_claim(
      "q_reduc", "[n+d,d+1]_q = sum_k q^(k-1) [k+d-1,d]_q", "Gaussian binomial sum, first form", nd1,
      [](auto&, Instance i) { return qanalog::gauss(i.n + i.d, i.d + 1); },
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) acc += qanalog::q_pow(static_cast<unsigned>(k - 1)) * qanalog::gauss(k + i.d - 1, i.d);
        return acc;
      }));
  claims.push_back(make_q_claim(
      "q_reduc_alt", "[n+d,d+1]_q = sum_k q^((d+1)(n-k)) [k+d-1,d]_q", "Gaussian binomial sum, second form", nd1,
      [](auto&, Instance i) { return qanalog::gauss(i.n + i.d, i.d + 1); },
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) {
          acc += qanalog::q_pow(static_cast<unsigned>((i.d + 1) * (i.n - k))) * qanalog::gauss(k + i.d - 1, i.d);
        }
        return acc;
      }));

  claims.push_back(make_claim(
      "tri_next", "{n+2,2} = t {n+1,2} + {n+1}^2", "analog of T(n+1) - T(n) = (n+1)^2", n0,
      [](auto& c, Instance i) { return c.simplicial(i.n + 1, 2); },
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        const auto& f = c.fib(static_cast<std::size_t>(i.n + 1));
        return c.t() * c.simplicial(i.n, 2) + f * f;
      }));
  claims.push_back(make_claim(
      "tri_lucas", "phi^(n+1) {n,2} + phi'^(n-1) {n+1,2} = <n> {n}^2 / {2}", "analog of T(n-1) + T(n) = n^2", n1,
      [base](auto& c, Instance i) {
        const auto& r = c.ring();
        return r.mul(c.phi_pow(i.n + 1), base(c, c.fibonomial(i.n, 2))) +
               r.mul(c.phi_conj_pow(i.n - 1), base(c, c.fibonomial(i.n + 1, 2)));
      },
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        const auto& f = c.fib(static_cast<std::size_t>(i.n));
        return ring_traits<R>::exact_div(c.lucas(static_cast<std::size_t>(i.n)) * f * f, c.fib(2));
      }));
  claims.push_back(make_claim(
      "tri_alt_sum", "{n+1,2} = sum_k t^(n-k) {k}^2", "analog of T(n) = sum (-1)^(n-k) k^2", n0,
      [](auto& c, Instance i) { return c.simplicial(i.n, 2); },
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        R acc = c.from_int(0);
        for (long k = 1; k <= i.n; ++k) {
          const auto& f = c.fib(static_cast<std::size_t>(k));
          acc = acc + ring_pow(c.t(), static_cast<unsigned>(i.n - k)) * f * f;
        }
        return acc;
      }));

  claims.push_back(make_q_claim(
      "q_tri_pair", "[n+2,2]_q = -q [n+1,2]_q + ((1-q^(n+1))/(1-q))^2", "q-analog of T(n+1) - T(n) = (n+1)^2", n0,
      [](auto&, Instance i) { return qanalog::gauss(i.n + 2, 2); },
      [](auto&, Instance i) {
        IntPoly qn1 = qanalog::q_int(i.n + 1);
        return -qanalog::q_pow(1) * qanalog::gauss(i.n + 1, 2) + qn1 * qn1;
      }));
  claims.push_back(make_q_claim(
      "q_tri_lucas", "[n,2]_q + q^(n-1) [n+1,2]_q = (1+q^n)/(1+q) [n]_q^2", "q-analog of T(n-1) + T(n) = n^2", n1,
      [](auto&, Instance i) {
        return qanalog::gauss(i.n, 2) + qanalog::q_pow(static_cast<unsigned>(i.n - 1)) * qanalog::gauss(i.n + 1, 2);
      },
      [](auto&, Instance i) {
        IntPoly qn = qanalog::q_int(i.n);
        return exact_div((IntPoly(1) + qanalog::q_pow(static_cast<unsigned>(i.n))) * qn * qn,
                         IntPoly(1) + qanalog::q_pow(1));
      }));
  claims.push_back(make_q_claim(
      "schlosser", "[n+1,2]_q = sum_k (-q)^(n-k) ((1-q^k)/(1-q))^2", "alternating sum of squared q-numbers", n0,
      [](auto&, Instance i) { return qanalog::gauss(i.n + 1, 2); },
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) {
          IntPoly qk = qanalog::q_int(k);
          acc += ring_pow(-qanalog::q_pow(1), static_cast<unsigned>(i.n - k)) * qk * qk;
        }
        return acc;
      }));
  claims.push_back(make_q_claim(
      "warnaar_tri_sum", "[n+1,2]_q = sum_k (1-q^k)/(1-q) q^(2(n-k))", "q-triangular numbers as weighted sums", n0,
      [](auto&, Instance i) { return qanalog::gauss(i.n + 1, 2); },
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) acc += qanalog::q_int(k) * qanalog::q_pow(static_cast<unsigned>(2 * (i.n - k)));
        return acc;
      }));
  claims.push_back(make_q_claim(
      "warnaar_tri_sum_alt", "[n+1,2]_q = sum_k q^(k-1) (1-q^k)/(1-q)", "q-triangular numbers as weighted sums", n0,
      [](auto&, Instance i) { return qanalog::gauss(i.n + 1, 2); },
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) acc += qanalog::q_pow(static_cast<unsigned>(k - 1)) * qanalog::q_int(k);
        return acc;
      }));

  claims.push_back(make_claim(
      "tri_square_diff", "{n+2,2}^2 - t^2 {n+1,2}^2 = (({n+2} + t{n})/s) {n+1}^3", "analog of T(n+1)^2 - T(n)^2 = n^3",
      n0,
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        const auto& a = c.simplicial(i.n + 1, 2);
        const auto& b = c.simplicial(i.n, 2);
        return a * a - c.t() * c.t() * b * b;
      },
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        const auto un = static_cast<std::size_t>(i.n);
        const auto& f = c.fib(un + 1);
        return ring_traits<R>::exact_div((c.fib(un + 2) + c.t() * c.fib(un)) * f * f * f, c.s());
      }));
  claims.push_back(make_q_claim(
      "warnaar_sq_diff", "[n+2,2]_q^2 - q^2 [n+1,2]_q^2 = (1-q^(2(n+1)))/(1-q^2) ((1-q^(n+1))/(1-q))^2",
      "q-analog of T(n+1)^2 - T(n)^2 = n^3", n0,
      [](auto&, Instance i) {
        IntPoly a = qanalog::gauss(i.n + 2, 2);
        IntPoly b = qanalog::gauss(i.n + 1, 2);
        return a * a - qanalog::q_pow(2) * b * b;
      },
      [](auto&, Instance i) {
        IntPoly even = exact_div(qanalog::one_minus_q_pow(static_cast<unsigned>(2 * (i.n + 1))), qanalog::one_minus_q_pow(2));
        IntPoly qn1 = qanalog::q_int(i.n + 1);
        return even * qn1 * qn1;
      }));

  claims.push_back(make_claim(
      "cube_sum", "sum_k t^(2(n-k)) (({k+1} + t{k-1})/s) {k}^3 = {n+1,2}^2", "analog of sum k^3 = (sum k)^2", n0,
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        R acc = c.from_int(0);
        for (long k = 1; k <= i.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          const auto& f = c.fib(uk);
          R term = ring_traits<R>::exact_div((c.fib(uk + 1) + c.t() * c.fib(uk - 1)) * f * f * f, c.s());
          acc = acc + ring_pow(c.t(), static_cast<unsigned>(2 * (i.n - k))) * term;
        }
        return acc;
      },
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        const auto& tn = c.simplicial(i.n, 2);
        return tn * tn;
      }));
  claims.push_back(make_claim(
      "cube_sum_phi",
      "sum_k t^(2(n-k)) ((phi^2k - phi'^2k)/(phi^2 - phi'^2)) ((phi^k - phi'^k)/(phi - phi'))^2 = {n+1,2}^2",
      "sum of cubes, divided-difference form", n0,
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        const auto& r = c.ring();
        const QuadElem<R> phi = r.phi();
        const QuadElem<R> phic = r.phi_conj();
        const QuadElem<R> phi2 = r.mul(phi, phi);
        const QuadElem<R> phic2 = r.mul(phic, phic);
        QuadElem<R> acc;
        for (long k = 1; k <= i.n; ++k) {
          QuadElem<R> single = detail::divided_power_sum(r, phi, phic, k);
          QuadElem<R> doubled = detail::divided_power_sum(r, phi2, phic2, k);
          QuadElem<R> term = r.mul(doubled, r.mul(single, single));
          acc += term.scaled(ring_pow(c.t(), static_cast<unsigned>(2 * (i.n - k))));
        }
        return acc;
      },
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        const auto& tn = c.simplicial(i.n, 2);
        return tn * tn;
      }));

  claims.push_back(make_special_claim(
      "cube_sum_fib", "sum_k (F(k+1) + F(k-1)) F(k)^3 = F(n)^2 F(n+1)^2", "Fibonacci sum of cubes",
      Params::rational(1, 1, "fibonacci"), n0,
      [](auto& c, Instance i) {
        mpq_class acc = 0;
        for (long k = 1; k <= i.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          const mpq_class& f = c.fib(uk);
          acc += (c.fib(uk + 1) + c.fib(uk - 1)) * f * f * f;
        }
        return acc;
      },
      [](auto& c, Instance i) {
        const auto un = static_cast<std::size_t>(i.n);
        mpq_class prod = c.fib(un) * c.fib(un + 1);
        return mpq_class(prod * prod);
      }));
  claims.push_back(make_special_claim(
      "cube_sum_pell", "sum_k (P(k+1) + P(k-1)) P(k)^3 = P(n)^2 P(n+1)^2 / 2", "Pell sum of cubes",
      Params::rational(2, 1, "pell"), n0,
      [](auto& c, Instance i) {
        mpq_class acc = 0;
        for (long k = 1; k <= i.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          const mpq_class& f = c.fib(uk);
          acc += (c.fib(uk + 1) + c.fib(uk - 1)) * f * f * f;
        }
        return acc;
      },
      [](auto& c, Instance i) {
        const auto un = static_cast<std::size_t>(i.n);
        mpq_class prod = c.fib(un) * c.fib(un + 1);
        return mpq_class(prod * prod / 2);
      }));
  claims.push_back(make_special_claim(
      "cube_sum_jacobsthal", "sum_k 4^(n-k) (J(k+1) + 2 J(k-1)) J(k)^3 = J(n)^2 J(n+1)^2", "Jacobsthal sum of cubes",
      Params::rational(1, 2, "jacobsthal"), n0,
      [](auto& c, Instance i) {
        mpq_class acc = 0;
        for (long k = 1; k <= i.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          const mpq_class& f = c.fib(uk);
          mpz_class four_pow;
          mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(i.n - k));
          acc += four_pow * (c.fib(uk + 1) + 2 * c.fib(uk - 1)) * f * f * f;
        }
        return acc;
      },
      [](auto& c, Instance i) {
        const auto un = static_cast<std::size_t>(i.n);
        mpq_class prod = c.fib(un) * c.fib(un + 1);
        return mpq_class(prod * prod);
      }));
  claims.push_back(make_special_claim(
      "cube_sum_mersenne", "sum_k 4^(n-k) (2^k + 1)(2^k - 1)^3 = (2^n - 1)^2 (2^(n+1) - 1)^2 / 3",
      "Mersenne sum of cubes", Params::rational(3, -2, "mersenne"), n0,
      [](auto&, Instance i) {
        mpq_class acc = 0;
        for (long k = 1; k <= i.n; ++k) {
          mpz_class four_pow;
          mpz_class two_k;
          mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(i.n - k));
          mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
          mpz_class m = two_k - 1;
          acc += four_pow * (two_k + 1) * m * m * m;
        }
        return acc;
      },
      [](auto&, Instance i) {
        mpz_class two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(i.n));
        mpz_class a = two_n - 1;
        mpz_class b = 2 * two_n - 1;
        return mpq_class(mpq_class(a * a * b * b) / 3);
      }));
  claims.push_back(make_q_claim(
      "warnaar", "sum_k q^(2(n-k)) ((1-q^2k)/(1-q^2)) ((1-q^k)/(1-q))^2 = [n+1,2]_q^2", "q-analog of sum k^3 = (sum k)^2",
      n0,
      [](auto&, Instance i) {
        IntPoly acc;
        for (long k = 1; k <= i.n; ++k) {
          IntPoly even = exact_div(qanalog::one_minus_q_pow(static_cast<unsigned>(2 * k)), qanalog::one_minus_q_pow(2));
          IntPoly qk = qanalog::q_int(k);
          acc += qanalog::q_pow(static_cast<unsigned>(2 * (i.n - k))) * even * qk * qk;
        }
        return acc;
      },
      [](auto&, Instance i) {
        IntPoly g = qanalog::gauss(i.n + 1, 2);
        return g * g;
      }));

  claims.push_back(make_claim(
      "tetra_identity", "{n+3,3} = s t {n+2,3} + {n+1} {n+2,2}", "analog of Te(n+1) + 2 Te(n) = (n+1) T(n+1)", n0,
      [](auto& c, Instance i) { return c.simplicial(i.n + 1, 3); },
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        return c.s() * c.t() * c.simplicial(i.n, 3) + c.fib(static_cast<std::size_t>(i.n + 1)) * c.simplicial(i.n + 1, 2);
      }));
  claims.push_back(make_q_claim(
      "tetra_q", "[n+3,3]_q = -(1+q) q [n+2,3]_q + (1-q^(n+1))/(1-q) [n+2,2]_q", "q-tetrahedral recurrence", n0,
      [](auto&, Instance i) { return qanalog::gauss(i.n + 3, 3); },
      [](auto&, Instance i) {
        IntPoly q = qanalog::q_pow(1);
        return -(IntPoly(1) + q) * q * qanalog::gauss(i.n + 2, 3) + qanalog::q_int(i.n + 1) * qanalog::gauss(i.n + 2, 2);
      }));

  // Exact facts behind the reciprocal-sum corollary.
  claims.push_back(make_claim(
      "cassini", "{n+1}^2 - {n}{n+2} = (-t)^n", "Cassini-type identity", n0,
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        const auto un = static_cast<std::size_t>(i.n);
        const auto& f = c.fib(un + 1);
        return f * f - c.fib(un) * c.fib(un + 2);
      },
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        return ring_pow(R(-c.t()), static_cast<unsigned>(i.n));
      }));
  ClaimDomain rational_n0;
  rational_n0.symbolic = false;
  rational_n0.q_symbolic = false;
  claims.push_back(make_claim(
      "alt_tri_partial", "sum_{k<=n} (-t)^k / ({k}{k+1}) = {2}/{1} - {n+2}/{n+1}", "telescoping partial sums",
      rational_n0,
      [](auto& c, Instance i) {
        using R = scalar_of<decltype(c)>;
        R acc = c.from_int(0);
        for (long k = 1; k <= i.n; ++k) {
          const auto uk = static_cast<std::size_t>(k);
          acc = acc + ring_traits<R>::exact_div(ring_pow(R(-c.t()), static_cast<unsigned>(k)), c.fib(uk) * c.fib(uk + 1));
        }
        return acc;
      },
      [](auto& c, Instance i) -> scalar_of<std::remove_reference_t<decltype(c)>> {
        using R = scalar_of<decltype(c)>;
        const auto un = static_cast<std::size_t>(i.n);
        return ring_traits<R>::exact_div(c.fib(2), c.fib(1)) - ring_traits<R>::exact_div(c.fib(un + 2), c.fib(un + 1));
      }));

  std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

inline const std::vector<Claim>& polytopic_claims() {
  static const std::vector<Claim> claims = build_polytopic_claims();
  return claims;
}

inline const Claim& find_claim(const std::string& id) {
  const auto& all = polytopic_claims();
  auto it = std::find_if(all.begin(), all.end(), [&](const Claim& c) { return c.id == id; });
  if (it == all.end()) throw error(errc::unknown_name, "no claim with id '" + id + "'");
  return *it;
}

}  // namespace stfib
