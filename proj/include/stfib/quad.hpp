#pragma once

// The quadratic extension R[phi]/(phi^2 - s*phi - t). The conjugate root
// phi' = s - phi is never a separate generator: it is conj(phi).

#include <optional>
#include <ostream>
#include <string>

#include "stfib/ring.hpp"

namespace stfib {

/// a + b*phi.
template <class R>
struct QuadElem {
  R a{};
  R b{};

  QuadElem() : a(ring_traits<R>::from_int(0)), b(ring_traits<R>::from_int(0)) {}
  QuadElem(R a_, R b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadElem(R base) : a(std::move(base)), b(ring_traits<R>::from_int(0)) {}

  /// True when the element lies in the base ring.
  bool in_base_ring() const { return ring_traits<R>::is_zero(b); }
  bool is_zero() const { return ring_traits<R>::is_zero(a) && ring_traits<R>::is_zero(b); }

  QuadElem operator-() const { return {R(-a), R(-b)}; }
  QuadElem& operator+=(const QuadElem& o) {
    a = a + o.a;
    b = b + o.b;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    a = a - o.a;
    b = b - o.b;
    return *this;
  }
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }

  QuadElem scaled(const R& k) const { return {R(a * k), R(b * k)}; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a == y.a && x.b == y.b; }

  std::string to_string(const VarNames& v = {}) const {
    const std::string as = ring_traits<R>::to_string(a, v);
    if (in_base_ring()) return as;
    const std::string bs = ring_traits<R>::to_string(b, v);
    std::string phi_part = "(" + bs + ")*phi";
    if (ring_traits<R>::is_zero(a)) return phi_part;
    return "(" + as + ") + " + phi_part;
  }
};

template <class R>
std::ostream& operator<<(std::ostream& os, const QuadElem<R>& x) {
  return os << x.to_string();
}

/// Arithmetic of R[phi] for fixed s, t.
template <class R>
class QuadRing {
 public:
  using base_type = R;
  using value_type = QuadElem<R>;

  QuadRing(R s, R t) : s_(std::move(s)), t_(std::move(t)) {}

  const R& s() const noexcept { return s_; }
  const R& t() const noexcept { return t_; }

  value_type zero() const { return {}; }
  value_type one() const { return value_type(ring_traits<R>::from_int(1)); }
  value_type embed(R x) const { return value_type(std::move(x)); }
  value_type phi() const { return {ring_traits<R>::from_int(0), ring_traits<R>::from_int(1)}; }
  value_type phi_conj() const { return conj(phi()); }

  value_type add(const value_type& x, const value_type& y) const { return x + y; }
  value_type sub(const value_type& x, const value_type& y) const { return x - y; }
  value_type neg(const value_type& x) const { return -x; }

  /// (a1 + b1 phi)(a2 + b2 phi) = (a1 a2 + t b1 b2) + (a1 b2 + a2 b1 + s b1 b2) phi.
  value_type mul(const value_type& x, const value_type& y) const {
    R bb = x.b * y.b;
    R a = x.a * y.a + t_ * bb;
    R b = x.a * y.b + y.a * x.b + s_ * bb;
    return {std::move(a), std::move(b)};
  }

  /// a + b phi  ->  (a + b s) - b phi.
  value_type conj(const value_type& x) const { return {R(x.a + x.b * s_), R(-x.b)}; }

  /// x * conj(x), which lies in the base ring.
  R norm(const value_type& x) const { return mul(x, conj(x)).a; }
  R trace(const value_type& x) const { return (x + conj(x)).a; }

  value_type pow(const value_type& x, unsigned e) const {
    value_type result = one();
    value_type b = x;
    while (e != 0) {
      if (e & 1U) result = mul(result, b);
      e >>= 1U;
      if (e != 0) b = mul(b, b);
    }
    return result;
  }

  /// phi^i * phi'^j, the monomials that q-products reduce to.
  value_type phi_monomial(unsigned i, unsigned j) const { return mul(pow(phi(), i), pow(phi_conj(), j)); }

  /// Inverse when the norm is a unit of the base ring.
  std::optional<value_type> inverse(const value_type& x) const {
    auto inv_norm = ring_traits<R>::unit_inverse(norm(x));
    if (!inv_norm) return std::nullopt;
    return conj(x).scaled(*inv_norm);
  }

  bool equal(const value_type& x, const value_type& y) const { return x == y; }

 private:
  R s_;
  R t_;
};

}  // namespace stfib
