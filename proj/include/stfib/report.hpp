#pragma once

// Machine-readable run reports: plain structs, JSON (schema 1), round-trip.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "stfib/claims.hpp"
#include "stfib/error.hpp"
#include "stfib/numerics.hpp"
#include "stfib/oeis.hpp"

namespace stfib {

inline constexpr int report_schema = 1;

/// A NumericClaimReport with every number rendered as decimal text.
struct NumericEntry {
  std::string claim_id;
  std::string params;
  std::string form;
  std::string lhs;
  std::string lhs_tail;
  long lhs_terms = 0;
  bool lhs_converged = false;
  std::string rhs;
  std::string rhs_tail;
  long rhs_terms = 0;
  bool rhs_converged = false;
  std::string difference;
  std::string tolerance;
  std::string verdict;
  std::string expected;
  std::string note;

  bool as_expected() const { return verdict == expected; }

  friend bool operator==(const NumericEntry&, const NumericEntry&) = default;
};

inline NumericEntry to_entry(const NumericClaimReport& r, int digits = 40) {
  return {r.claim_id,
          r.params,
          r.form,
          r.lhs.value.to_string(digits),
          r.lhs.tail_bound.to_string(6),
          r.lhs.terms,
          r.lhs.converged,
          r.rhs.value.to_string(digits),
          r.rhs.tail_bound.to_string(6),
          r.rhs.terms,
          r.rhs.converged,
          r.difference.to_string(6),
          r.tolerance.to_string(6),
          to_string(r.verdict),
          to_string(r.expected),
          r.note};
}

/// A place where the printed text and the computation disagree.
struct Erratum {
  std::string id;
  std::string topic;
  std::string printed;
  std::string computed;
  std::string evidence;  // claim or fixture id backing the entry
  bool confirmed = false;

  friend bool operator==(const Erratum&, const Erratum&) = default;
};

struct Report {
  int schema = report_schema;
  long prec = 256;
  std::vector<ClaimReport> claims;
  std::vector<NumericEntry> numerics;
  std::vector<OeisCheckResult> oeis;
  std::vector<Erratum> errata;

  bool as_expected() const {
    return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.as_expected(); }) &&
           std::all_of(numerics.begin(), numerics.end(), [](const auto& n) { return n.as_expected(); }) &&
           std::all_of(oeis.begin(), oeis.end(), [](const auto& o) { return o.ok(); });
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline void sort_claims(std::vector<ClaimReport>& claims) {
  std::stable_sort(claims.begin(), claims.end(), [](const ClaimReport& a, const ClaimReport& b) {
    return std::tie(a.claim_id, a.params) < std::tie(b.claim_id, b.params);
  });
}

inline Expect expect_from_string(const std::string& s) {
  if (s == to_string(Expect::pass)) return Expect::pass;
  if (s == to_string(Expect::discrepant)) return Expect::discrepant;
  throw error(errc::parse_error, "unknown expected status '" + s + "'");
}

inline Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::verified, Verdict::discrepant, Verdict::error}) {
    if (s == to_string(v)) return v;
  }
  throw error(errc::parse_error, "unknown verdict '" + s + "'");
}

using nlohmann::json;

inline void to_json(json& j, const Instance& i) { j = json{{"n", i.n}, {"d", i.d}}; }
inline void from_json(const json& j, Instance& i) {
  j.at("n").get_to(i.n);
  j.at("d").get_to(i.d);
}

inline void to_json(json& j, const ClaimFailure& f) {
  j = json{{"at", f.at}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"difference", f.difference}};
}
inline void from_json(const json& j, ClaimFailure& f) {
  j.at("at").get_to(f.at);
  j.at("lhs").get_to(f.lhs);
  j.at("rhs").get_to(f.rhs);
  j.at("difference").get_to(f.difference);
}

inline void to_json(json& j, const ClaimReport& r) {
  j = json{{"claim_id", r.claim_id},   {"anchor", r.anchor},
           {"params", r.params},       {"expected", to_string(r.expected)},
           {"instances", r.instances}, {"failures", r.failures},
           {"failure_count", r.failure_count}, {"verdict", to_string(r.verdict)},
           {"message", r.message}};
}
inline void from_json(const json& j, ClaimReport& r) {
  j.at("claim_id").get_to(r.claim_id);
  j.at("anchor").get_to(r.anchor);
  j.at("params").get_to(r.params);
  r.expected = expect_from_string(j.at("expected").get<std::string>());
  j.at("instances").get_to(r.instances);
  j.at("failures").get_to(r.failures);
  j.at("failure_count").get_to(r.failure_count);
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  j.at("message").get_to(r.message);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NumericEntry, claim_id, params, form, lhs, lhs_tail, lhs_terms, lhs_converged, rhs,
                                   rhs_tail, rhs_terms, rhs_converged, difference, tolerance, verdict, expected, note)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OeisMismatch, index, fixture, computed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OeisCheckResult, id, family, formula, provenance, compared, matched, mismatches)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Erratum, id, topic, printed, computed, evidence, confirmed)

inline void to_json(json& j, const Report& r) {
  std::vector<ClaimReport> claims = r.claims;
  sort_claims(claims);
  j = json{{"schema", r.schema},     {"prec", r.prec}, {"as_expected", r.as_expected()},
           {"claims", claims},       {"numerics", r.numerics},
           {"oeis", r.oeis},         {"errata", r.errata}};
}
inline void from_json(const json& j, Report& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != report_schema) throw error(errc::parse_error, "unsupported report schema " + std::to_string(r.schema));
  j.at("prec").get_to(r.prec);
  j.at("claims").get_to(r.claims);
  j.at("numerics").get_to(r.numerics);
  j.at("oeis").get_to(r.oeis);
  j.at("errata").get_to(r.errata);
}

inline std::string serialize(const Report& r, int indent = 2) { return json(r).dump(indent); }

inline Report parse_report(const std::string& text) {
  try {
    return json::parse(text).get<Report>();
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("report: ") + e.what());
  }
}

}  // namespace stfib
