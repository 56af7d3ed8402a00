#pragma once

// Runners shared by the command-line tool and the acceptance suite.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "stfib/claims.hpp"
#include "stfib/numerics.hpp"
#include "stfib/oeis.hpp"
#include "stfib/polytopic.hpp"
#include "stfib/registry.hpp"
#include "stfib/report.hpp"
#include "stfib/series.hpp"

namespace stfib {

/// The six numeric specializations every exact claim is checked at.
inline std::vector<Params> standard_specializations() {
  const mpq_class tau[] = {2};
  return {spec_lookup("natural"), spec_lookup("fibonacci"), spec_lookup("pell"),
          spec_lookup("jacobsthal"), spec_lookup("mersenne"), spec_lookup("chebyshev", tau)};
}

inline std::vector<Params> all_modes() {
  std::vector<Params> ps{Params::symbolic()};
  for (auto& p : standard_specializations()) ps.push_back(std::move(p));
  ps.push_back(Params::q_symbolic());
  return ps;
}

inline RunRanges default_ranges(const Params& p) {
  switch (p.mode) {
    case Mode::symbolic: return {12, 4};
    case Mode::q_symbolic: return {15, 4};
    case Mode::rational: return {25, 6};
  }
  return {};
}

struct ClaimRun {
  std::vector<std::string> ids;  // empty: whole catalog
  std::vector<Params> params;
  std::optional<long> max_n;
  std::optional<long> max_d;
};

/// Evaluate the selected claims at every admitted parameter setting. A claim
/// named explicitly but admitted nowhere runs at its own specialization, if
/// it has one.
inline std::vector<ClaimReport> run_claims(const ClaimRun& run) {
  std::vector<const Claim*> selected;
  if (run.ids.empty()) {
    for (const auto& c : polytopic_claims()) selected.push_back(&c);
  } else {
    for (const auto& id : run.ids) selected.push_back(&find_claim(id));
  }
  auto ranges_for = [&](const Params& p) {
    RunRanges r = default_ranges(p);
    if (run.max_n) r.max_n = *run.max_n;
    if (run.max_d) r.max_d = *run.max_d;
    return r;
  };
  std::vector<ClaimReport> out;
  for (const Claim* c : selected) {
    bool ran = false;
    for (const auto& p : run.params) {
      if (!c->domain.admits(p)) continue;
      out.push_back(claim_eval(*c, p, ranges_for(p)));
      ran = true;
    }
    if (!ran && !run.ids.empty()) {
      if (!c->domain.only) throw error(errc::domain_violation, c->id + " does not apply to the selected parameters");
      out.push_back(claim_eval(*c, *c->domain.only, ranges_for(*c->domain.only)));
    }
  }
  sort_claims(out);
  return out;
}

/// The generating-function checks at `p`: nderiv_geo for n <= 5,
/// gf_polytopic for d <= 5, and gf_tri_squared.
inline std::vector<ClaimReport> run_series_checks(const Params& p, std::optional<std::size_t> order = std::nullopt) {
  const std::size_t n_order = order.value_or(default_series_order(p));
  std::vector<ClaimReport> out;
  for (long n = 1; n <= 5; ++n) out.push_back(check_nderiv_geo(n, n_order, p));
  for (long d = 1; d <= 5; ++d) out.push_back(check_gf_polytopic(d, n_order, p));
  out.push_back(check_gf_tri_squared(n_order, p));
  return out;
}

/// tri_reciprocal is expected to be Inconclusive when |t| = 1: its
/// logarithm is then evaluated on the edge of the disc of convergence.
inline NumericVerdict tri_reciprocal_expectation(const Params& p) {
  return abs(p.t0) == 1 ? NumericVerdict::inconclusive : NumericVerdict::verified;
}

inline const std::vector<std::string>& numeric_claim_ids() {
  static const std::vector<std::string> ids = {"alt_tri_closed", "even_reciprocal", "odd_reciprocal",
                                               "tri_reciprocal", "zeta_classical",  "zeta_partial_sum",
                                               "zeta_printed"};
  return ids;
}

inline std::string canonical_numeric_id(const std::string& id) {
  if (id == "tri_reci") return "tri_reciprocal";
  if (id == "even_reci") return "even_reciprocal";
  if (id == "odd_reci") return "odd_reciprocal";
  if (id == "zeta") return "zeta_printed";
  for (const auto& known : numeric_claim_ids()) {
    if (known == id) return id;
  }
  throw error(errc::unknown_name, "no numeric claim named '" + id + "'");
}

/// One numeric claim at `p`. odd_reciprocal reads its parameter from s0.
inline std::vector<NumericClaimReport> run_numeric_claim(const std::string& id, const Params& p,
                                                         const SumControl& ctl = {}) {
  const std::string cid = canonical_numeric_id(id);
  if (cid == "zeta_classical") return {check_classical_zeta2(ctl)};
  if (!p.is_rational()) throw error(errc::invalid_params, cid + " needs numeric parameters");
  if (cid == "alt_tri_closed") return check_alt_tri_closed(p, ctl);
  if (cid == "even_reciprocal") return {check_even_reciprocal(p, ctl)};
  if (cid == "odd_reciprocal") {
    if (p.t0 != 1) throw error(errc::invalid_params, "odd_reciprocal is stated for t = 1");
    return check_odd_reciprocal(p.s0, ctl);
  }
  if (cid == "tri_reciprocal") return {check_tri_reciprocal(p, ctl, tri_reciprocal_expectation(p))};
  if (p.name.empty()) throw error(errc::invalid_params, cid + " needs a named family");
  if (cid == "zeta_partial_sum") return {check_zeta_partial(p.name, ctl)};
  const bool close = p.name == "fibonacci";
  return {check_zeta_printed(p.name, close ? "1e-12" : "1e-3",
                             close ? NumericVerdict::verified : NumericVerdict::discrepant, ctl)};
}

namespace detail {

inline const NumericEntry* find_entry(const Report& r, const std::string& id, const std::string& params,
                                      const std::string& form) {
  for (const auto& e : r.numerics) {
    if (e.claim_id == id && e.params == params && e.form == form) return &e;
  }
  return nullptr;
}

inline bool claim_has(const Report& r, const std::string& id, Verdict v) {
  bool any = false;
  for (const auto& c : r.claims) {
    if (c.claim_id != id) continue;
    if (c.verdict != v) return false;
    any = true;
  }
  return any;
}

inline std::string sequence_text(const Params& p, long d, long first, long count) {
  auto ctx = make_rational_context(p);
  std::string out;
  for (long n = first; n < first + count; ++n) {
    if (!out.empty()) out += ",";
    out += ctx.simplicial(n, d).get_str();
  }
  return out;
}

}  // namespace detail

/// Errata backed by the evidence already in `r`.
inline std::vector<Erratum> collect_errata(const Report& r) {
  std::vector<Erratum> out;
  for (const char* family : {"pell", "jacobsthal", "mersenne"}) {
    const Params p = spec_lookup(family);
    const auto* e = detail::find_entry(r, "zeta_printed", p.label(), "as-printed");
    out.push_back({std::string("zeta_") + family, std::string("printed decimal of zeta(1), ") + family,
                   find_printed_zeta(family).value, e ? e->lhs.substr(0, 22) : "", "zeta_printed",
                   e && e->verdict == to_string(NumericVerdict::discrepant)});
  }
  {
    bool all = true;
    bool any = false;
    for (const auto& e : r.numerics) {
      if (e.claim_id != "alt_tri_closed") continue;
      any = true;
      const auto want = e.form == "as-printed" ? NumericVerdict::discrepant : NumericVerdict::verified;
      all = all && e.verdict == to_string(want);
    }
    out.push_back({"alt_tri_closed", "closed form of sum (-t)^n / ({n}{n+1})", "(s + sqrt(s^2 + 4t)) / 2",
                   "(s - sqrt(s^2 + 4t)) / 2", "alt_tri_closed", any && all});
  }
  const mpq_class tau[] = {2};
  struct Special {
    Params p;
    const char* printed;
    const char* corrected;
  };
  const Special specials[] = {{spec_lookup("fibonacci"), "(1 + sqrt 5) / 2", "(1 - sqrt 5) / 2"},
                              {spec_lookup("pell"), "1 + sqrt 2", "1 - sqrt 2"},
                              {spec_lookup("jacobsthal"), "2", "-1"},
                              {spec_lookup("mersenne"), "2", "1"},
                              {spec_lookup("chebyshev", tau), "tau + sqrt(tau^2 - 1)", "tau - sqrt(tau^2 - 1)"}};
  for (const auto& sp : specials) {
    const auto* printed = detail::find_entry(r, "alt_tri_closed", sp.p.label(), "as-printed");
    const auto* corrected = detail::find_entry(r, "alt_tri_closed", sp.p.label(), "corrected");
    out.push_back({"alt_tri_closed_" + sp.p.name, "alternating sum at " + sp.p.label(), sp.printed,
                   std::string(sp.corrected) + (corrected ? " = " + corrected->lhs.substr(0, 22) : ""),
                   "alt_tri_closed",
                   printed && corrected && printed->verdict == to_string(NumericVerdict::discrepant) &&
                       corrected->verdict == to_string(NumericVerdict::verified)});
  }
  {
    bool any = false;
    bool all = true;
    for (const auto& n : r.numerics) {
      if (n.claim_id != "odd_reciprocal" || n.form != "as-printed") continue;
      any = true;
      all = all && n.verdict == to_string(NumericVerdict::discrepant);
    }
    out.push_back({"theta2_sign", "sign of the theta_2 closed form for sum 1/{2n-1}",
                   "-sqrt(s^2 + 4)/4 theta_2(phi'^2)^2", "+sqrt(s^2 + 4)/4 theta_2(phi'^2)^2", "odd_reciprocal",
                   any && all});
  }
  out.push_back({"gspn_recu2_index", "lower-order index in the phi'-first polytopic recurrence", "{n-d-1,d-1}",
                 "{n+d-1,d-1}", "gspn_recu2_as_printed",
                 detail::claim_has(r, "gspn_recu2_as_printed", Verdict::discrepant) &&
                     detail::claim_has(r, "gspn_recu2", Verdict::verified)});
  out.push_back({"tetra_reduc2_index", "upper index in the phi'-first tetrahedral sum", "{n+3,3}", "{n+2,3}",
                 "tetra_reduc2_as_printed",
                 detail::claim_has(r, "tetra_reduc2_as_printed", Verdict::discrepant) &&
                     detail::claim_has(r, "reduc_sum2", Verdict::verified)});
  {
    const std::string printed = "0,1,2,6,15,55,231,903,3655";
    const std::string computed = detail::sequence_text(spec_lookup("jacobsthal"), 2, 0, 9);
    out.push_back({"jacobsthal_triangular_list", "listed values of J(n) J(n+1)", printed, computed, "A084175",
                   printed != computed});
  }
  {
    const std::string printed = "1,12,174,2436,34307,482664";
    const std::string computed = detail::sequence_text(spec_lookup("pell"), 3, 0, 6);
    out.push_back({"pell_tetrahedral_list", "listed values of P(n) P(n+1) P(n+2) / 10 from n = 0", printed, computed,
                   "A099930", printed != computed});
  }
  return out;
}

struct ReportOptions {
  Real::prec_t prec = 256;
  OeisRunOptions oeis;
  bool series = true;
};

/// Everything: exact claims in every mode, generating functions, numeric
/// claims, fixture comparisons, errata.
inline Report build_report(const ReportOptions& opt = {}) {
  Report r;
  r.prec = static_cast<long>(opt.prec);
  const auto modes = all_modes();
  r.claims = run_claims({{}, modes, {}, {}});
  if (opt.series) {
    for (const auto& p : modes) {
      for (auto& c : run_series_checks(p)) r.claims.push_back(std::move(c));
    }
  }
  sort_claims(r.claims);
  SumControl ctl;
  ctl.prec = opt.prec;
  for (const auto& n : numeric_suite(ctl)) r.numerics.push_back(to_entry(n));
  r.oeis = oeis_check_all({}, opt.oeis);
  r.errata = collect_errata(r);
  return r;
}

}  // namespace stfib
