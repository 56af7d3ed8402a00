#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "stfib/error.hpp"

namespace stfib {

enum class Mode {
  symbolic,    // s, t formal
  rational,    // s, t exact rationals
  q_symbolic,  // s = 1 + q, t = -q with q formal
};

/// Evaluation context: which ring the sequence values live in.
struct Params {
  Mode mode = Mode::symbolic;
  mpq_class s0 = 0;
  mpq_class t0 = 0;
  std::string name;  // specialization tag, may be empty

  static Params symbolic() { return {Mode::symbolic, 0, 0, "symbolic"}; }
  static Params q_symbolic() { return {Mode::q_symbolic, 0, 0, "q-symbolic"}; }

  static Params rational(mpq_class s, mpq_class t, std::string tag = {}) {
    s.canonicalize();
    t.canonicalize();
    if (s == 0 || t == 0) {
      throw error(errc::invalid_params, "s and t must be nonzero (got s=" + s.get_str() + ", t=" + t.get_str() + ")");
    }
    return {Mode::rational, std::move(s), std::move(t), std::move(tag)};
  }

  bool is_rational() const noexcept { return mode == Mode::rational; }

  /// Short human label, e.g. "fibonacci(1,1)" or "symbolic".
  std::string label() const {
    if (mode != Mode::rational) return name;
    std::string st = "(" + s0.get_str() + "," + t0.get_str() + ")";
    return name.empty() ? st : name + st;
  }

  friend bool operator==(const Params& a, const Params& b) {
    return a.mode == b.mode && a.s0 == b.s0 && a.t0 == b.t0;
  }
};

/// Parse "p", "-p", or "p/q" into an exact rational.
inline mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw error(errc::parse_error, "not an exact rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw error(errc::parse_error, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace stfib
