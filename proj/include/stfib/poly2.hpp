#pragma once

// Sparse polynomials in two commuting indeterminates s, t with exact
// (GMP) coefficients.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "stfib/error.hpp"

namespace stfib {

/// Exponent pair s^s * t^t. The defaulted ordering is lexicographic with
/// s > t, which is the monomial order used by exact division.
struct Monomial {
  unsigned s = 0;
  unsigned t = 0;

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& o) const { return {s + o.s, t + o.t}; }
  bool divides(const Monomial& o) const { return s <= o.s && t <= o.t; }
  Monomial operator/(const Monomial& o) const { return {s - o.s, t - o.t}; }
};

namespace detail {

inline bool coeff_divisible(const mpz_class& a, const mpz_class& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}
inline bool coeff_divisible(const mpq_class&, const mpq_class& b) { return b != 0; }

inline mpz_class coeff_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline mpq_class coeff_quotient(const mpq_class& a, const mpq_class& b) { return a / b; }

inline void normalize(mpz_class&) {}
inline void normalize(mpq_class& c) { c.canonicalize(); }

inline std::string coeff_string(const mpz_class& c) { return c.get_str(); }
inline std::string coeff_string(const mpq_class& c) { return c.get_str(); }

}  // namespace detail

template <class Coeff>
class Poly2 {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<Monomial, Coeff>;

  Poly2() = default;
  Poly2(long c) { add_term({0, 0}, Coeff(c)); }  // NOLINT: integers embed
  explicit Poly2(const Coeff& c) { add_term({0, 0}, c); }

  static Poly2 monomial(const Coeff& c, unsigned i, unsigned j) {
    Poly2 p;
    p.add_term({i, j}, c);
    return p;
  }
  static Poly2 s() { return monomial(Coeff(1), 1, 0); }
  static Poly2 t() { return monomial(Coeff(1), 0, 1); }

  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  Coeff constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Leading term under the lex order; precondition: nonzero.
  const std::pair<const Monomial, Coeff>& leading() const { return *terms_.rbegin(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.s + m.t);
    return d;
  }

  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Coeff& slot = r.terms_[ma * mb];
        slot += ca * cb;
      }
    }
    r.prune();
    return r;
  }

  Poly2 scaled(const Coeff& k) const {
    if (k == 0) return {};
    Poly2 r = *this;
    for (auto& [m, c] : r.terms_) {
      c *= k;
      detail::normalize(c);
    }
    return r;
  }

  Poly2 pow(unsigned e) const {
    Poly2 result(1);
    Poly2 base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Substitute rational values for s and t.
  mpq_class evaluate(const mpq_class& s0, const mpq_class& t0) const {
    mpq_class acc = 0;
    std::map<unsigned, mpq_class> spow;
    std::map<unsigned, mpq_class> tpow;
    auto power = [](std::map<unsigned, mpq_class>& cache, const mpq_class& base, unsigned e) {
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      mpq_class r = 1;
      for (unsigned k = 0; k < e; ++k) r *= base;
      cache.emplace(e, r);
      return r;
    };
    for (const auto& [m, c] : terms_) acc += mpq_class(c) * power(spow, s0, m.s) * power(tpow, t0, m.t);
    acc.canonicalize();
    return acc;
  }

  /// Canonical rendering, terms in descending lex order, e.g. "s^3 + 2*s*t".
  std::string to_string(std::string_view svar = "s", std::string_view tvar = "t") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      Coeff mag = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      auto append_var = [&](std::string_view v, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      append_var(svar, m.s);
      append_var(tvar, m.t);
      if (mono.empty()) {
        out += detail::coeff_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += detail::coeff_string(mag) + "*" + mono;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.to_string(); }

 private:
  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    detail::normalize(it->second);
    if (it->second == 0) terms_.erase(it);
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      detail::normalize(it->second);
      if (it->second == 0) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  term_map terms_;
};

using IntPoly = Poly2<mpz_class>;
using RatPoly = Poly2<mpq_class>;

/// Exact quotient by leading-monomial elimination, or nullopt if `den` does
/// not divide `num` in the coefficient ring.
template <class Coeff>
std::optional<Poly2<Coeff>> try_exact_div(const Poly2<Coeff>& num, const Poly2<Coeff>& den) {
  if (den.is_zero()) throw error(errc::domain_error, "polynomial division by zero");
  Poly2<Coeff> quotient;
  Poly2<Coeff> rest = num;
  const auto& [lead_m, lead_c] = den.leading();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading();
    if (!lead_m.divides(m) || !detail::coeff_divisible(c, lead_c)) return std::nullopt;
    auto step = Poly2<Coeff>::monomial(detail::coeff_quotient(c, lead_c), m.s - lead_m.s, m.t - lead_m.t);
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

template <class Coeff>
Poly2<Coeff> exact_div(const Poly2<Coeff>& num, const Poly2<Coeff>& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw error(errc::not_divisible, "(" + num.to_string() + ") / (" + den.to_string() + ")");
  return *std::move(q);
}

}  // namespace stfib
