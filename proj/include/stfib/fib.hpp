#pragma once

// Generalized Fibonacci values {n}, Lucas companions <n>, phi powers,
// fibotorials and fibonomial coefficients, evaluated in a ring chosen by
// the Params mode.

#include <gmpxx.h>

#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stfib/params.hpp"
#include "stfib/poly2.hpp"
#include "stfib/quad.hpp"
#include "stfib/ring.hpp"

namespace stfib {

/// Append-only memo of a second-order linear recurrence x[n+2] = s x[n+1] + t x[n].
/// Not synchronized: one cache per worker.
template <class R>
class FibCache {
 public:
  FibCache(R s, R t, R x0, R x1) : s_(std::move(s)), t_(std::move(t)) {
    memo_.push_back(std::move(x0));
    memo_.push_back(std::move(x1));
  }

  const R& operator[](std::size_t n) {
    while (memo_.size() <= n) {
      const std::size_t m = memo_.size();
      memo_.push_back(s_ * memo_[m - 1] + t_ * memo_[m - 2]);
    }
    return memo_[n];
  }

  std::size_t cached() const noexcept { return memo_.size(); }

 private:
  R s_;
  R t_;
  std::deque<R> memo_;  // deque: references stay valid while growing
};

/// Which of the two Pascal recurrences builds the table.
enum class PascalForm { phi_first, phi_conj_first };

/// Everything needed to evaluate sequence values in ring R. Caches grow
/// lazily, so a Context is not safe to share between threads.
template <class R>
class Context {
 public:
  using scalar = R;
  using quad = QuadElem<R>;

  Context(R s, R t, VarNames names, std::string label)
      : ring_(s, t),
        fib_(s, t, from_int(0), from_int(1)),
        lucas_(s, t, from_int(2), s),
        names_(std::move(names)),
        label_(std::move(label)) {}

  const QuadRing<R>& ring() const noexcept { return ring_; }
  const R& s() const noexcept { return ring_.s(); }
  const R& t() const noexcept { return ring_.t(); }
  const VarNames& names() const noexcept { return names_; }
  const std::string& label() const noexcept { return label_; }

  static R from_int(long v) { return ring_traits<R>::from_int(v); }

  const R& fib(std::size_t n) { return fib_[n]; }
  const R& lucas(std::size_t n) { return lucas_[n]; }

  const R& fibotorial(std::size_t n) {
    if (fibotorial_.empty()) fibotorial_.push_back(from_int(1));
    while (fibotorial_.size() <= n) {
      const std::size_t m = fibotorial_.size();
      fibotorial_.push_back(fibotorial_[m - 1] * fib(m));
    }
    return fibotorial_[n];
  }

  const quad& phi_pow(std::size_t n) { return power_cache(phi_pows_, ring_.phi(), n); }
  const quad& phi_conj_pow(std::size_t n) { return power_cache(phi_conj_pows_, ring_.phi_conj(), n); }

  /// {n choose k} by exact division of fibotorials.
  R fibonomial_by_division(long n, long k) {
    if (k < 0 || n < 0 || k > n) return from_int(0);
    const auto un = static_cast<std::size_t>(n);
    const auto uk = static_cast<std::size_t>(k);
    return ring_traits<R>::exact_div(fibotorial(un), fibotorial(uk) * fibotorial(un - uk));
  }

  /// {n choose k} from a Pascal table in R[phi]; the phi-component of every
  /// entry is expected to vanish.
  const quad& fibonomial_by_pascal(long n, long k, PascalForm form = PascalForm::phi_first) {
    static const quad zero_entry{};
    if (k < 0 || n < 0 || k > n) return zero_entry;
    auto& table = form == PascalForm::phi_first ? pascal_phi_ : pascal_conj_;
    const auto un = static_cast<std::size_t>(n);
    if (table.empty()) table.push_back({ring_.one()});
    while (table.size() <= un) {
      const std::size_t m = table.size() - 1;  // build row m+1 from row m
      const auto& prev = table[m];
      std::vector<quad> row(m + 2);
      row[0] = ring_.one();
      for (std::size_t j = 1; j <= m + 1; ++j) {
        const quad& keep = j <= m ? prev[j] : zero_entry;
        if (form == PascalForm::phi_first) {
          row[j] = ring_.mul(phi_pow(j), keep) + ring_.mul(phi_conj_pow(m + 1 - j), prev[j - 1]);
        } else {
          row[j] = ring_.mul(phi_conj_pow(j), keep) + ring_.mul(phi_pow(m + 1 - j), prev[j - 1]);
        }
      }
      table.push_back(std::move(row));
    }
    return table[un][static_cast<std::size_t>(k)];
  }

  /// {n choose k}; both the division and the Pascal route are computed and
  /// must agree.
  const R& fibonomial(long n, long k) {
    static const R zero_value = from_int(0);
    if (k < 0 || n < 0 || k > n) return zero_value;
    const auto key = std::make_pair(n, k);
    if (auto it = fibonomials_.find(key); it != fibonomials_.end()) return it->second;
    R by_division = fibonomial_by_division(n, k);
    const quad& by_pascal = fibonomial_by_pascal(n, k);
    if (!by_pascal.in_base_ring() || !(by_pascal.a == by_division)) {
      throw error(errc::internal_mismatch, "fibonomial {" + std::to_string(n) + " choose " + std::to_string(k) +
                                               "}: division gives " + ring_traits<R>::to_string(by_division, names_) +
                                               ", Pascal gives " + by_pascal.to_string(names_));
    }
    return fibonomials_.emplace(key, std::move(by_division)).first->second;
  }

  /// Generalized simplicial d-polytopic number {n+d-1 choose d}; zero at n = 0.
  const R& simplicial(long n, long d) { return fibonomial(n + d - 1, d); }

  std::string str(const R& x) const { return ring_traits<R>::to_string(x, names_); }
  std::string str(const quad& x) const { return x.to_string(names_); }

 private:
  const quad& power_cache(std::deque<quad>& cache, const quad& base, std::size_t n) {
    if (cache.empty()) cache.push_back(ring_.one());
    while (cache.size() <= n) cache.push_back(ring_.mul(cache.back(), base));
    return cache[n];
  }

  QuadRing<R> ring_;
  FibCache<R> fib_;
  FibCache<R> lucas_;
  std::deque<R> fibotorial_;
  std::deque<quad> phi_pows_;
  std::deque<quad> phi_conj_pows_;
  std::deque<std::vector<quad>> pascal_phi_;
  std::deque<std::vector<quad>> pascal_conj_;
  std::map<std::pair<long, long>, R> fibonomials_;
  VarNames names_;
  std::string label_;
};

using SymbolicContext = Context<IntPoly>;
using RationalContext = Context<mpq_class>;

inline SymbolicContext make_symbolic_context() { return {IntPoly::s(), IntPoly::t(), VarNames{"s", "t"}, "symbolic"}; }

/// s = 1 + q, t = -q, with q stored in the first polynomial slot.
inline SymbolicContext make_q_context() {
  const IntPoly q = IntPoly::s();
  return {IntPoly(1) + q, -q, VarNames{"q", "_"}, "q-symbolic"};
}

inline RationalContext make_rational_context(const Params& p) {
  if (!p.is_rational()) throw error(errc::invalid_params, "rational context requires rational params");
  return {p.s0, p.t0, VarNames{}, p.label()};
}

/// Run `f` with a freshly built context of the ring matching `p.mode`.
template <class F>
decltype(auto) with_context(const Params& p, F&& f) {
  switch (p.mode) {
    case Mode::symbolic: {
      auto ctx = make_symbolic_context();
      return f(ctx);
    }
    case Mode::q_symbolic: {
      auto ctx = make_q_context();
      return f(ctx);
    }
    case Mode::rational:
      break;
  }
  auto ctx = make_rational_context(p);
  return f(ctx);
}

/// A sequence value as produced for a Params: polynomial or exact rational.
using SeqValue = std::variant<IntPoly, mpq_class>;

inline std::string to_string(const SeqValue& v, const VarNames& names = {}) {
  if (const auto* p = std::get_if<IntPoly>(&v)) return p->to_string(names.first, names.second);
  return std::get<mpq_class>(v).get_str();
}

namespace detail {
template <class G>
SeqValue seq_value(const Params& p, G&& g) {
  return with_context(p, [&](auto& ctx) -> SeqValue { return SeqValue(g(ctx)); });
}
}  // namespace detail

inline SeqValue fib(std::size_t n, const Params& p) {
  return detail::seq_value(p, [&](auto& ctx) { return ctx.fib(n); });
}
inline SeqValue lucas(std::size_t n, const Params& p) {
  return detail::seq_value(p, [&](auto& ctx) { return ctx.lucas(n); });
}
inline SeqValue fibotorial(std::size_t n, const Params& p) {
  return detail::seq_value(p, [&](auto& ctx) { return ctx.fibotorial(n); });
}
inline SeqValue fibonomial(long n, long k, const Params& p) {
  return detail::seq_value(p, [&](auto& ctx) { return ctx.fibonomial(n, k); });
}

/// phi^n reduced to a + b phi over Z[s,t].
inline QuadElem<IntPoly> phi_pow(std::size_t n) {
  auto ctx = make_symbolic_context();
  return ctx.phi_pow(n);
}

}  // namespace stfib
