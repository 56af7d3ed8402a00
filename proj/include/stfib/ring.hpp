#pragma once

// Uniform interface over the scalar rings the library evaluates in:
// exact rationals (a numeric specialization) and integer polynomials
// (symbolic s,t or the formal q-specialization).

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>

#include "stfib/error.hpp"
#include "stfib/poly2.hpp"

namespace stfib {

/// Names printed for the two polynomial slots.
struct VarNames {
  std::string first = "s";
  std::string second = "t";
};

template <class R>
struct ring_traits;

template <>
struct ring_traits<mpq_class> {
  static mpq_class from_int(long v) { return mpq_class(v); }
  static bool is_zero(const mpq_class& x) { return x == 0; }

  static mpq_class exact_div(const mpq_class& a, const mpq_class& b) {
    if (b == 0) throw error(errc::domain_error, "rational division by zero");
    mpq_class q = a / b;
    q.canonicalize();
    return q;
  }

  static std::optional<mpq_class> unit_inverse(const mpq_class& x) {
    if (x == 0) return std::nullopt;
    mpq_class r = 1 / x;
    return r;
  }

  static std::string to_string(const mpq_class& x, const VarNames& = {}) { return x.get_str(); }
};

template <class C>
struct ring_traits<Poly2<C>> {
  static Poly2<C> from_int(long v) { return Poly2<C>(v); }
  static bool is_zero(const Poly2<C>& x) { return x.is_zero(); }
  static Poly2<C> exact_div(const Poly2<C>& a, const Poly2<C>& b) { return stfib::exact_div(a, b); }

  // Units of Z[s,t] are +-1; of Q[s,t], nonzero constants.
  static std::optional<Poly2<C>> unit_inverse(const Poly2<C>& x) {
    if (!x.is_constant() || x.is_zero()) return std::nullopt;
    C c = x.constant_term();
    if constexpr (std::same_as<C, mpz_class>) {
      if (c != 1 && c != -1) return std::nullopt;
      return Poly2<C>(c);
    } else {
      return Poly2<C>(C(1 / c));
    }
  }

  static std::string to_string(const Poly2<C>& x, const VarNames& v = {}) {
    return x.to_string(v.first, v.second);
  }
};

/// Scalar types the evaluators are instantiated for.
template <class R>
concept Scalar = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_traits<R>::exact_div(a, b) } -> std::convertible_to<R>;
};

template <class R>
R ring_pow(const R& base, unsigned e) {
  R result = ring_traits<R>::from_int(1);
  R b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

}  // namespace stfib
