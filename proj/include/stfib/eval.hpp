#pragma once

// Numeric embedding of R[phi] at a rational specialization.

#include <gmpxx.h>

#include "stfib/error.hpp"
#include "stfib/params.hpp"
#include "stfib/poly2.hpp"
#include "stfib/quad.hpp"
#include "stfib/real.hpp"

namespace stfib {

inline constexpr Real::prec_t min_precision = 64;

/// The two roots of x^2 - s x - t at rational (s, t).
struct RealRoots {
  Real phi;       // (s + sqrt(D)) / 2
  Real phi_conj;  // (s - sqrt(D)) / 2
  Real sqrt_disc; // sqrt(s^2 + 4t)
};

inline void check_numeric_params(const Params& p, Real::prec_t prec) {
  if (!p.is_rational()) throw error(errc::invalid_params, "numeric evaluation needs rational (s, t)");
  if (prec < min_precision) throw error(errc::invalid_params, "precision below 64 bits");
}

inline mpq_class discriminant(const Params& p) { return p.s0 * p.s0 + 4 * p.t0; }

inline RealRoots real_roots(const Params& p, Real::prec_t prec) {
  check_numeric_params(p, prec);
  const mpq_class disc = discriminant(p);
  if (disc < 0) throw error(errc::negative_discriminant, "s^2 + 4t < 0 at " + p.label());
  Real root = sqrt(Real(disc, prec));
  Real s(p.s0, prec);
  Real half = Real::pow2(-1, prec);
  return {(s + root) * half, (s - root) * half, root};
}

inline Real eval_real(const QuadElem<mpq_class>& x, const Params& p, Real::prec_t prec) {
  RealRoots roots = real_roots(p, prec);
  return Real(x.a, prec) + Real(x.b, prec) * roots.phi;
}

/// Substitute (s0, t0) into both components, then phi.
inline Real eval_real(const QuadElem<IntPoly>& x, const Params& p, Real::prec_t prec) {
  check_numeric_params(p, prec);
  QuadElem<mpq_class> v{x.a.evaluate(p.s0, p.t0), x.b.evaluate(p.s0, p.t0)};
  return eval_real(v, p, prec);
}

}  // namespace stfib
