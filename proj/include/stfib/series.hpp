#pragma once

// Truncated formal power series over a coefficient ring object, the
// (phi, phi')-derivative, and coefficient-by-coefficient checks of the
// generating functions for simplicial polytopic numbers.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stfib/claims.hpp"
#include "stfib/error.hpp"
#include "stfib/fib.hpp"
#include "stfib/polytopic.hpp"
#include "stfib/quad.hpp"
#include "stfib/ring.hpp"

namespace stfib {

/// Ring-object adapter for a plain scalar ring (e.g. Z[q]).
template <class R>
class BaseRing {
 public:
  using value_type = R;

  value_type zero() const { return ring_traits<R>::from_int(0); }
  value_type one() const { return ring_traits<R>::from_int(1); }
  value_type add(const R& x, const R& y) const { return x + y; }
  value_type sub(const R& x, const R& y) const { return x - y; }
  value_type neg(const R& x) const { return -x; }
  value_type mul(const R& x, const R& y) const { return x * y; }
  std::optional<R> inverse(const R& x) const { return ring_traits<R>::unit_inverse(x); }
  bool equal(const R& x, const R& y) const { return x == y; }
};

/// c_0 + c_1 x + ... + c_{N-1} x^{N-1}, exact modulo x^N.
template <class Ring>
class Series {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  Series(Ring ring, std::size_t order) : ring_(std::move(ring)), coeffs_(order, ring_.zero()) {}

  Series(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  /// 1 + x + x^2 + ...
  static Series geometric(Ring ring, std::size_t order) {
    Series g(std::move(ring), order);
    for (auto& c : g.coeffs_) c = g.ring_.one();
    return g;
  }

  /// 1 - a x
  static Series one_minus(Ring ring, const value_type& a, std::size_t order) {
    Series f(std::move(ring), order);
    if (order > 0) f.coeffs_[0] = f.ring_.one();
    if (order > 1) f.coeffs_[1] = f.ring_.neg(a);
    return f;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  const value_type& operator[](std::size_t k) const { return coeffs_.at(k); }
  void set(std::size_t k, value_type v) { coeffs_.at(k) = std::move(v); }

  Series truncated(std::size_t order) const {
    if (order > coeffs_.size()) throw error(errc::domain_error, "cannot extend a truncated series");
    return Series(ring_, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = ring_.neg(c);
    return r;
  }

  friend Series operator+(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r = f;
    for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = f.ring_.add(f.coeffs_[k], g.coeffs_[k]);
    return r;
  }

  friend Series operator-(const Series& f, const Series& g) { return f + (-g); }

  friend Series operator*(const Series& f, const Series& g) {
    require_same_order(f, g);
    Series r(f.ring_, f.order());
    for (std::size_t i = 0; i < f.order(); ++i) {
      for (std::size_t j = 0; i + j < f.order(); ++j) {
        r.coeffs_[i + j] = f.ring_.add(r.coeffs_[i + j], f.ring_.mul(f.coeffs_[i], g.coeffs_[j]));
      }
    }
    return r;
  }

  Series scaled(const value_type& c) const {
    Series r = *this;
    for (auto& v : r.coeffs_) v = ring_.mul(c, v);
    return r;
  }

  /// f(a x): c_n -> a^n c_n.
  Series scale_arg(const value_type& a) const {
    Series r = *this;
    value_type p = ring_.one();
    for (auto& v : r.coeffs_) {
      v = ring_.mul(p, v);
      p = ring_.mul(p, a);
    }
    return r;
  }

  /// Multiplicative inverse modulo x^N; needs a unit constant term.
  Series inverse() const {
    if (coeffs_.empty()) return *this;
    auto inv0 = ring_.inverse(coeffs_[0]);
    if (!inv0) throw error(errc::non_unit_constant_term, "constant term of the series is not a unit");
    Series r(ring_, order());
    r.coeffs_[0] = *inv0;
    for (std::size_t n = 1; n < order(); ++n) {
      value_type acc = ring_.zero();
      for (std::size_t k = 1; k <= n; ++k) acc = ring_.add(acc, ring_.mul(coeffs_[k], r.coeffs_[n - k]));
      r.coeffs_[n] = ring_.neg(ring_.mul(*inv0, acc));
    }
    return r;
  }

  friend bool operator==(const Series& f, const Series& g) {
    if (f.order() != g.order()) return false;
    for (std::size_t k = 0; k < f.order(); ++k) {
      if (!f.ring_.equal(f.coeffs_[k], g.coeffs_[k])) return false;
    }
    return true;
  }

 private:
  static void require_same_order(const Series& f, const Series& g) {
    if (f.order() != g.order()) {
      throw error(errc::domain_error, "series orders differ (" + std::to_string(f.order()) + " vs " +
                                          std::to_string(g.order()) + ")");
    }
  }

  Ring ring_;
  std::vector<value_type> coeffs_;
};

template <class R>
using SeriesQuad = Series<QuadRing<R>>;

/// (phi, phi')-derivative: x^n -> {n} x^(n-1). The result has order N-1.
template <class R>
SeriesQuad<R> pderiv(const SeriesQuad<R>& f) {
  const auto& ring = f.ring();
  if (f.order() == 0) return f;
  FibCache<R> numbers(ring.s(), ring.t(), ring_traits<R>::from_int(0), ring_traits<R>::from_int(1));
  SeriesQuad<R> r(ring, f.order() - 1);
  for (std::size_t n = 1; n < f.order(); ++n) r.set(n - 1, f[n].scaled(numbers[n]));
  return r;
}

/// 1 / prod_{k<count} (1 - phi^(d-k) phi'^k x), i.e. 1/(phi^d x; phi'/phi)_count.
template <class R>
SeriesQuad<R> pochhammer_series(const QuadRing<R>& ring, long d, long count, std::size_t order) {
  if (d < 0 || count < 1 || count > d + 1) {
    throw error(errc::invalid_params, "pochhammer_series needs d >= 0 and 1 <= count <= d+1");
  }
  SeriesQuad<R> prod(ring, order);
  if (order > 0) prod.set(0, ring.one());
  for (long k = 0; k < count; ++k) {
    auto factor = ring.phi_monomial(static_cast<unsigned>(d - k), static_cast<unsigned>(k));
    prod = prod * SeriesQuad<R>::one_minus(ring, factor, order);
  }
  return prod.inverse();
}

inline std::size_t default_series_order(const Params& p) { return p.is_rational() ? 40 : 25; }

namespace detail {

template <class Ctx>
ClaimReport series_report(std::string id, std::string anchor, const Ctx& ctx) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.anchor = std::move(anchor);
  r.params = ctx.label();
  return r;
}

template <class V, class Str>
void compare_coeff(ClaimReport& r, long n, const V& lhs, const V& rhs, Str&& str) {
  constexpr std::size_t max_recorded = 8;
  ++r.instances;
  if (lhs == rhs) return;
  ++r.failure_count;
  if (r.failures.size() < max_recorded) r.failures.push_back({Instance{n, 0}, str(lhs), str(rhs), str(lhs - rhs)});
}

inline void finish(ClaimReport& r) { r.verdict = r.failure_count == 0 ? Verdict::verified : Verdict::discrepant; }

}  // namespace detail

/// n-fold derivative of 1/(1-x) against {n}! / (phi^n x; q)_{n+1}, mod x^(N-n).
inline ClaimReport check_nderiv_geo(long n, std::size_t order, const Params& p) {
  if (n < 1 || order < static_cast<std::size_t>(n) + 5) {
    throw error(errc::invalid_params, "check_nderiv_geo needs n >= 1 and order >= n + 5");
  }
  return with_context(p, [&](auto& ctx) {
    using R = typename std::remove_reference_t<decltype(ctx)>::scalar;
    ClaimReport r = detail::series_report("nderiv_geo", "n-th derivative of the geometric series", ctx);
    const auto& ring = ctx.ring();
    SeriesQuad<R> lhs = SeriesQuad<R>::geometric(ring, order);
    for (long k = 0; k < n; ++k) lhs = pderiv(lhs);
    const std::size_t m = order - static_cast<std::size_t>(n);
    SeriesQuad<R> rhs = pochhammer_series(ring, n, n + 1, m).scaled(ring.embed(ctx.fibotorial(static_cast<std::size_t>(n))));
    for (std::size_t k = 0; k < m; ++k) {
      detail::compare_coeff(r, static_cast<long>(k), lhs[k], rhs[k], [&](const auto& v) { return ctx.str(v); });
    }
    detail::finish(r);
    return r;
  });
}

/// sum_{n>=1} {n+d-1 choose d} x^n = x / (phi^d x; q)_{d+1}, for 1 <= n < N.
inline ClaimReport check_gf_polytopic(long d, std::size_t order, const Params& p) {
  if (d < 1) throw error(errc::invalid_params, "check_gf_polytopic needs d >= 1");
  return with_context(p, [&](auto& ctx) {
    using R = typename std::remove_reference_t<decltype(ctx)>::scalar;
    ClaimReport r = detail::series_report("gf_polytopic", "generating function x/(1-x)^(d+1)", ctx);
    SeriesQuad<R> gf = pochhammer_series(ctx.ring(), d, d + 1, order);
    for (std::size_t n = 1; n < order; ++n) {
      detail::compare_coeff(r, static_cast<long>(n), gf[n - 1], ctx.ring().embed(ctx.simplicial(static_cast<long>(n), d)),
                            [&](const auto& v) { return ctx.str(v); });
    }
    detail::finish(r);
    return r;
  });
}

/// Coefficients of x^n, 0 <= n < N, of the rational function for squared
/// triangular numbers, numerator as printed.
template <class R>
SeriesQuad<R> tri_squared_gf(Context<R>& ctx, std::size_t order) {
  const auto& ring = ctx.ring();
  auto mono = [&](unsigned i, unsigned j) { return ring.phi_monomial(i, j); };
  auto fib_q = [&](std::size_t k) { return ring.embed(ctx.fib(k)); };
  SeriesQuad<R> num(ring, order);
  const std::vector<QuadElem<R>> top = {
      ring.zero(),
      ring.one(),
      ring.sub(ring.mul(fib_q(4), ring.phi()), mono(4, 0)),
      ring.neg(ring.mul(fib_q(3), mono(3, 3))),
      ring.sub(ring.mul(fib_q(3), mono(7, 3)), ring.mul(fib_q(4), mono(6, 3))),
  };
  for (std::size_t k = 0; k < top.size() && k < order; ++k) num.set(k, top[k]);
  SeriesQuad<R> den = SeriesQuad<R>::one_minus(ring, ring.embed(ctx.t() * ctx.t()), order) *
                      SeriesQuad<R>::one_minus(ring, mono(0, 4), order);
  for (unsigned k = 0; k < 4; ++k) den = den * SeriesQuad<R>::one_minus(ring, mono(4 - k, k), order);
  return num * den.inverse();
}

/// Same display specialized to s = 1+q, t = -q, over Z[q].
inline Series<BaseRing<IntPoly>> tri_squared_gf_q(std::size_t order) {
  using S = Series<BaseRing<IntPoly>>;
  const BaseRing<IntPoly> ring;
  const IntPoly q3 = qanalog::q_pow(3);
  S num(ring, order);
  const std::vector<IntPoly> top = {IntPoly(), IntPoly(1), qanalog::q_int(4) - IntPoly(1), -(qanalog::q_int(3) * q3),
                                    qanalog::q_int(3) * q3 - qanalog::q_int(4) * q3};
  for (std::size_t k = 0; k < top.size() && k < order; ++k) num.set(k, top[k]);
  S den = S::one_minus(ring, qanalog::q_pow(2), order) * S::one_minus(ring, qanalog::q_pow(4), order);
  for (unsigned k = 0; k < 4; ++k) den = den * S::one_minus(ring, qanalog::q_pow(k), order);
  return num * den.inverse();
}

/// Coefficient of x^n against {n+1 choose 2}^2 for 1 <= n < N (and 0 at n = 0).
/// In q-symbolic mode the q-display is checked against [n+1 choose 2]_q^2.
inline ClaimReport check_gf_tri_squared(std::size_t order, const Params& p) {
  if (order < 8) throw error(errc::invalid_params, "check_gf_tri_squared needs order >= 8");
  if (p.mode == Mode::q_symbolic) {
    auto ctx = make_q_context();
    ClaimReport r = detail::series_report("gf_tri_squared_q", "generating function of squared q-triangular numbers", ctx);
    auto gf = tri_squared_gf_q(order);
    auto str = [&](const IntPoly& v) { return v.to_string("q"); };
    detail::compare_coeff(r, 0, gf[0], IntPoly(), str);
    for (std::size_t n = 1; n < order; ++n) {
      IntPoly g = qanalog::gauss(static_cast<long>(n) + 1, 2);
      detail::compare_coeff(r, static_cast<long>(n), gf[n], IntPoly(g * g), str);
    }
    detail::finish(r);
    return r;
  }
  return with_context(p, [&](auto& ctx) {
    using R = typename std::remove_reference_t<decltype(ctx)>::scalar;
    ClaimReport r = detail::series_report("gf_tri_squared", "generating function of squared triangular numbers", ctx);
    SeriesQuad<R> gf = tri_squared_gf(ctx, order);
    auto str = [&](const auto& v) { return ctx.str(v); };
    detail::compare_coeff(r, 0, gf[0], ctx.ring().zero(), str);
    for (std::size_t n = 1; n < order; ++n) {
      const R& tri = ctx.simplicial(static_cast<long>(n), 2);
      detail::compare_coeff(r, static_cast<long>(n), gf[n], ctx.ring().embed(R(tri * tri)), str);
    }
    detail::finish(r);
    return r;
  });
}

}  // namespace stfib
