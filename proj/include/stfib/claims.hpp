#pragma once

// Machine-checkable identities: an lhs and an rhs evaluator over a declared
// parameter domain, compared exactly instance by instance.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "stfib/error.hpp"
#include "stfib/fib.hpp"
#include "stfib/params.hpp"
#include "stfib/quad.hpp"

namespace stfib {

/// One evaluation point. `d` is the dimension (or the lower index k of a
/// Pascal recurrence); it is 0 for claims that take only n.
struct Instance {
  long n = 0;
  long d = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Expect { pass, discrepant };
enum class Verdict { verified, discrepant, error };

inline const char* to_string(Expect e) { return e == Expect::pass ? "ExpectPass" : "ExpectDiscrepant"; }
inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "Verified";
    case Verdict::discrepant: return "Discrepant";
    case Verdict::error: return "Error";
  }
  return "Error";
}

struct ClaimFailure {
  Instance at;
  std::string lhs;
  std::string rhs;
  std::string difference;

  friend bool operator==(const ClaimFailure&, const ClaimFailure&) = default;
};

struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  std::string params;
  Expect expected = Expect::pass;
  long instances = 0;
  std::vector<ClaimFailure> failures;  // capped; see failure_count
  long failure_count = 0;
  Verdict verdict = Verdict::verified;
  std::string message;

  /// Whether the outcome is what the catalog expects.
  bool as_expected() const {
    return expected == Expect::pass ? verdict == Verdict::verified : verdict == Verdict::discrepant;
  }

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

/// Which parameter settings a claim is meaningful for, and its index ranges.
struct ClaimDomain {
  bool symbolic = true;
  bool rational = true;
  bool q_symbolic = true;
  std::optional<Params> only;  // restrict rational mode to one specialization
  long n_min = 0;
  bool uses_d = false;
  long d_min = 1;
  bool d_at_most_n = false;

  bool admits(const Params& p) const {
    switch (p.mode) {
      case Mode::symbolic: return symbolic;
      case Mode::q_symbolic: return q_symbolic;
      case Mode::rational: return rational && (!only || *only == p);
    }
    return false;
  }
};

template <class R>
using Evaluator = std::function<QuadElem<R>(Context<R>&, Instance)>;

struct Claim {
  std::string id;
  std::string description;
  std::string anchor;
  ClaimDomain domain;
  Expect expected = Expect::pass;
  std::string corrected_by;  // id of the claim holding the corrected form
  Evaluator<IntPoly> lhs_poly;
  Evaluator<IntPoly> rhs_poly;
  Evaluator<mpq_class> lhs_rat;
  Evaluator<mpq_class> rhs_rat;
};

/// Upper index bounds for a run.
struct RunRanges {
  long max_n = 12;
  long max_d = 4;
};

namespace detail {

template <class R, class F>
Evaluator<R> lift(F f) {
  return [f](Context<R>& ctx, Instance i) -> QuadElem<R> {
    auto v = f(ctx, i);
    if constexpr (std::is_same_v<decltype(v), QuadElem<R>>) {
      return v;
    } else {
      return QuadElem<R>(R(std::move(v)));
    }
  };
}

template <class R>
void eval_instances(const Claim& c, const Evaluator<R>& lhs, const Evaluator<R>& rhs, Context<R>& ctx,
                    const RunRanges& ranges, ClaimReport& report) {
  constexpr std::size_t max_recorded = 8;
  const long d_lo = c.domain.uses_d ? c.domain.d_min : 0;
  for (long n = c.domain.n_min; n <= ranges.max_n; ++n) {
    const long d_hi = !c.domain.uses_d ? 0 : c.domain.d_at_most_n ? std::min(n, ranges.max_d) : ranges.max_d;
    for (long d = d_lo; d <= d_hi; ++d) {
      const Instance at{n, d};
      QuadElem<R> l = lhs(ctx, at);
      QuadElem<R> r = rhs(ctx, at);
      ++report.instances;
      if (l == r) continue;
      ++report.failure_count;
      if (report.failures.size() < max_recorded) report.failures.push_back({at, ctx.str(l), ctx.str(r), ctx.str(l - r)});
    }
  }
}

}  // namespace detail

/// Claim valid in every mode; `lhs`/`rhs` are generic callables taking
/// (Context<R>&, Instance) and returning R or QuadElem<R>.
template <class L, class Rh>
Claim make_claim(std::string id, std::string description, std::string anchor, ClaimDomain domain, L lhs, Rh rhs) {
  Claim c{std::move(id), std::move(description), std::move(anchor), std::move(domain), Expect::pass, {}, {}, {}, {}, {}};
  c.lhs_poly = detail::lift<IntPoly>(lhs);
  c.rhs_poly = detail::lift<IntPoly>(rhs);
  c.lhs_rat = detail::lift<mpq_class>(lhs);
  c.rhs_rat = detail::lift<mpq_class>(rhs);
  return c;
}

/// Claim stated as a polynomial identity in q; only the q-symbolic mode applies.
template <class L, class Rh>
Claim make_q_claim(std::string id, std::string description, std::string anchor, ClaimDomain domain, L lhs, Rh rhs) {
  domain.symbolic = false;
  domain.rational = false;
  domain.q_symbolic = true;
  Claim c{std::move(id), std::move(description), std::move(anchor), std::move(domain), Expect::pass, {}, {}, {}, {}, {}};
  c.lhs_poly = detail::lift<IntPoly>(lhs);
  c.rhs_poly = detail::lift<IntPoly>(rhs);
  return c;
}

/// Claim stated for one numeric specialization.
template <class L, class Rh>
Claim make_special_claim(std::string id, std::string description, std::string anchor, Params only, ClaimDomain domain,
                         L lhs, Rh rhs) {
  domain.symbolic = false;
  domain.q_symbolic = false;
  domain.rational = true;
  domain.only = std::move(only);
  Claim c{std::move(id), std::move(description), std::move(anchor), std::move(domain), Expect::pass, {}, {}, {}, {}, {}};
  c.lhs_rat = detail::lift<mpq_class>(lhs);
  c.rhs_rat = detail::lift<mpq_class>(rhs);
  return c;
}

inline Claim expect_discrepant(Claim c, std::string corrected_by) {
  c.expected = Expect::discrepant;
  c.corrected_by = std::move(corrected_by);
  return c;
}

/// Evaluate `c` at every instance of `ranges` under `p`; comparison is exact.
inline ClaimReport claim_eval(const Claim& c, const Params& p, const RunRanges& ranges) {
  if (!c.domain.admits(p)) {
    throw error(errc::domain_violation, "claim '" + c.id + "' is not defined for " + p.label());
  }
  ClaimReport report;
  report.claim_id = c.id;
  report.anchor = c.anchor;
  report.params = p.label();
  report.expected = c.expected;
  try {
    if (p.is_rational()) {
      auto ctx = make_rational_context(p);
      detail::eval_instances(c, c.lhs_rat, c.rhs_rat, ctx, ranges, report);
    } else {
      auto ctx = p.mode == Mode::symbolic ? make_symbolic_context() : make_q_context();
      detail::eval_instances(c, c.lhs_poly, c.rhs_poly, ctx, ranges, report);
    }
    report.verdict = report.failure_count == 0 ? Verdict::verified : Verdict::discrepant;
  } catch (const error& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  return report;
}

}  // namespace stfib
