#pragma once

// Minimal value-semantic wrapper over an MPFR number. Every value carries
// its own precision; binary operations round to the larger of the two.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "stfib/error.hpp"

namespace stfib {

class Real {
 public:
  using prec_t = mpfr_prec_t;

  explicit Real(prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(const mpz_class& value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  static Real from_string(const std::string& text, prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
      throw error(errc::parse_error, "not a decimal number: '" + text + "'");
    }
    return r;
  }

  /// 2^e exactly.
  static Real pow2(long e, prec_t prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  static Real pi(prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  prec_t prec() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 40) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
  }

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define STFIB_REAL_BINOP(op, fn)                              \
  friend Real operator op(const Real& a, const Real& b) {     \
    Real r(std::max(a.prec(), b.prec()));                     \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                          \
    return r;                                                 \
  }                                                           \
  Real& operator op##=(const Real& b) {                       \
    if (b.prec() > prec()) mpfr_prec_round(v_, b.prec(), MPFR_RNDN); \
    fn(v_, v_, b.v_, MPFR_RNDN);                              \
    return *this;                                             \
  }
  STFIB_REAL_BINOP(+, mpfr_add)
  STFIB_REAL_BINOP(-, mpfr_sub)
  STFIB_REAL_BINOP(*, mpfr_mul)
  STFIB_REAL_BINOP(/, mpfr_div)
#undef STFIB_REAL_BINOP

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }

  friend Real abs(const Real& x) {
    Real r(x.prec());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& x) {
    Real r(x.prec());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& x) {
    Real r(x.prec());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& x) {
    Real r(x.prec());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& x, long e) {
    Real r(x.prec());
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.prec(), y.prec()));
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

 private:
  mpfr_t v_;
};

}  // namespace stfib
