// stfib: command-line front end for the (s,t)-Fibonacci library.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "stfib/harness.hpp"

namespace {

using nlohmann::json;
using namespace stfib;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_internal = 2;

struct Options {
  std::string s;
  std::string t;
  std::string family;
  bool symbolic = false;
  bool q_symbolic = false;
  bool classic = false;
  std::optional<long> max_n;
  std::optional<long> d;
  std::optional<std::size_t> order;
  long prec = 256;
  bool json = false;
  bool fetch = false;
  std::string fixtures;
  std::string n_range;
  bool all = false;
  std::vector<std::string> claims;
  std::string z = "1";
  bool zeta = false;
  std::string kind = "fib";
  bool tri_squared = false;
  std::vector<std::string> ids;
};

struct Range {
  long first = 0;
  long last = 0;
};

Range parse_range(const std::string& text, Range fallback) {
  if (text.empty()) return fallback;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw error(errc::parse_error, "bad range '" + text + "' (expected a..b or n)");
  }
}

/// "--family NAME" or "--family NAME:a,b" for parametrized families.
Params family_params(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<mpq_class> args;
  if (colon != std::string::npos) {
    std::stringstream in(spec.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) args.push_back(parse_rational(item));
  }
  return spec_lookup(name, args);
}

std::optional<Params> selected_params(const Options& o) {
  const int chosen = int(o.symbolic) + int(o.q_symbolic) + int(o.classic) + int(!o.family.empty()) +
                     int(!o.s.empty() || !o.t.empty());
  if (chosen > 1) throw error(errc::invalid_params, "choose one of --symbolic, --q-symbolic, --classic, --family, --s/--t");
  if (o.symbolic) return Params::symbolic();
  if (o.q_symbolic) return Params::q_symbolic();
  if (o.classic) return spec_lookup("natural");
  if (!o.family.empty()) return family_params(o.family);
  if (!o.s.empty() || !o.t.empty()) {
    if (o.s.empty() || o.t.empty()) throw error(errc::invalid_params, "--s and --t go together");
    return Params::rational(parse_rational(o.s), parse_rational(o.t));
  }
  return std::nullopt;
}

std::string params_json_label(const Params& p) { return p.label(); }

template <class F>
std::vector<std::string> values_over(const Params& p, Range r, F&& value) {
  std::vector<std::string> out;
  with_context(p, [&](auto& ctx) {
    for (long n = r.first; n <= r.last; ++n) out.push_back(value(ctx, n));
    return 0;
  });
  return out;
}

void print_values(const Options& o, const Params& p, Range r, const std::vector<std::string>& values) {
  if (o.json) {
    json j{{"schema", report_schema}, {"params", params_json_label(p)}, {"first", r.first}, {"last", r.last},
           {"values", values}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (p.is_rational()) {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
  } else if (values.size() == 1) {
    std::cout << values[0] << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << r.first + static_cast<long>(i) << ": " << values[i] << '\n';
  }
}

int cmd_seq(const Options& o) {
  const Params p = selected_params(o).value_or(Params::symbolic());
  const Range r = parse_range(o.n_range, {0, 10});
  if (r.first < 0) throw error(errc::invalid_params, "n must be nonnegative");
  const long k = o.d.value_or(2);
  auto values = values_over(p, r, [&](auto& ctx, long n) -> std::string {
    const auto un = static_cast<std::size_t>(n);
    if (o.kind == "fib") return ctx.str(ctx.fib(un));
    if (o.kind == "lucas") return ctx.str(ctx.lucas(un));
    if (o.kind == "fibotorial") return ctx.str(ctx.fibotorial(un));
    if (o.kind == "fibonomial") return ctx.str(ctx.fibonomial(n, k));
    throw error(errc::unknown_name, "unknown --kind '" + o.kind + "'");
  });
  print_values(o, p, r, values);
  return exit_ok;
}

int cmd_poly(const Options& o) {
  const Params p = selected_params(o).value_or(Params::symbolic());
  const long d = o.d.value_or(2);
  if (d < 1) throw error(errc::invalid_params, "--d must be at least 1");
  const Range r = parse_range(o.n_range, {0, 9});
  if (r.first < 0) throw error(errc::invalid_params, "n must be nonnegative");
  auto values = values_over(p, r, [&](auto& ctx, long n) { return ctx.str(ctx.simplicial(n, d)); });
  print_values(o, p, r, values);
  return exit_ok;
}

void print_claims(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(11) << to_string(r.verdict) << std::setw(26) << r.claim_id << std::setw(22)
              << r.params << r.instances << " instances";
    if (!r.as_expected()) std::cout << "  UNEXPECTED (" << to_string(r.expected) << ")";
    else if (r.expected == Expect::discrepant) std::cout << "  (expected)";
    std::cout << '\n';
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      std::cout << "           first failure at n=" << f.at.n << " d=" << f.at.d << ": " << f.lhs << " vs " << f.rhs
                << '\n';
    }
    if (!r.message.empty()) std::cout << "           " << r.message << '\n';
  }
}

int claims_exit(const std::vector<ClaimReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::error) return exit_internal;
  }
  for (const auto& r : reports) {
    if (!r.as_expected()) return exit_mismatch;
  }
  return exit_ok;
}

int cmd_verify(const Options& o) {
  if (!o.all && o.claims.empty()) throw error(errc::invalid_params, "verify needs --claim ID or --all");
  std::vector<Params> params;
  if (auto p = selected_params(o)) params.push_back(*p);
  else params.push_back(Params::symbolic());
  const std::vector<std::string> ids = o.all ? std::vector<std::string>{} : o.claims;
  std::vector<ClaimReport> reports = run_claims({ids, params, o.max_n, o.d});
  if (o.json) {
    Report r;
    r.prec = o.prec;
    r.claims = reports;
    std::cout << serialize(r) << '\n';
  } else {
    print_claims(reports);
  }
  return claims_exit(reports);
}

void print_numeric(const std::vector<NumericEntry>& entries) {
  for (const auto& e : entries) {
    std::cout << std::left << std::setw(13) << e.verdict << std::setw(18) << e.claim_id << std::setw(20) << e.params
              << e.form;
    if (!e.as_expected()) std::cout << "  UNEXPECTED (expected " << e.expected << ")";
    std::cout << "\n    lhs  " << e.lhs << "  (tail " << e.lhs_tail << ", " << e.lhs_terms << " terms)"
              << "\n    rhs  " << e.rhs << "  (tail " << e.rhs_tail << ", " << e.rhs_terms << " terms)"
              << "\n    diff " << e.difference << "  tol " << e.tolerance << '\n';
    if (!e.note.empty()) std::cout << "    note " << e.note << '\n';
  }
}

int numeric_exit(const std::vector<NumericEntry>& entries) {
  for (const auto& e : entries) {
    if (!e.as_expected()) return exit_mismatch;
  }
  return exit_ok;
}

int cmd_sums(const Options& o, bool zeta_mode) {
  if (o.prec < 64) throw error(errc::invalid_params, "--prec must be at least 64");
  SumControl ctl;
  ctl.prec = static_cast<Real::prec_t>(o.prec);
  const auto p = selected_params(o);
  std::vector<NumericEntry> entries;
  if (zeta_mode || o.zeta) {
    if (!p) throw error(errc::invalid_params, "zeta needs --family or --s/--t");
    const mpq_class z = parse_rational(o.z);
    SumResult v = zeta_st(z, *p, ctl);
    if (o.json) {
      json j{{"schema", report_schema}, {"params", p->label()},       {"z", z.get_str()},
             {"value", v.value.to_string(60)}, {"tail_bound", v.tail_bound.to_string(6)}, {"terms", v.terms}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "zeta(" << z.get_str() << ") at " << p->label() << " = " << v.value.to_string(40) << "\n  tail bound "
                << v.tail_bound.to_string(6) << ", " << v.terms << " terms\n";
    }
    if (z == 1 && !p->name.empty() && p->is_rational()) {
      bool known = false;
      for (const auto& pz : printed_zeta_values()) known = known || p->name == pz.family;
      if (known) {
        for (const auto& r : run_numeric_claim("zeta_printed", *p, ctl)) entries.push_back(to_entry(r));
        if (find_printed_zeta(p->name).partial_terms > 0) {
          for (const auto& r : run_numeric_claim("zeta_partial_sum", *p, ctl)) entries.push_back(to_entry(r));
        }
      }
    }
    if (!o.json) print_numeric(entries);
    return numeric_exit(entries);
  }
  if (o.all || o.claims.empty()) {
    for (const auto& r : numeric_suite(ctl)) entries.push_back(to_entry(r));
  } else {
    for (const auto& id : o.claims) {
      const Params at = p.value_or(spec_lookup("natural"));
      for (const auto& r : run_numeric_claim(id, at, ctl)) entries.push_back(to_entry(r));
    }
  }
  if (o.json) {
    Report r;
    r.prec = o.prec;
    r.numerics = entries;
    std::cout << serialize(r) << '\n';
  } else {
    print_numeric(entries);
  }
  return numeric_exit(entries);
}

int cmd_gf(const Options& o) {
  const Params p = selected_params(o).value_or(Params::symbolic());
  const std::size_t order = o.order.value_or(default_series_order(p));
  const long d = o.d.value_or(2);
  if (d < 1) throw error(errc::invalid_params, "--d must be at least 1");
  std::vector<std::string> coeffs;
  std::vector<ClaimReport> checks;
  if (o.tri_squared) {
    if (p.mode == Mode::q_symbolic) {
      const auto f = tri_squared_gf_q(order);
      auto ctx = make_q_context();
      for (std::size_t n = 0; n < order; ++n) coeffs.push_back(ctx.str(f[n]));
    } else {
      with_context(p, [&](auto& ctx) {
        const auto f = tri_squared_gf(ctx, order);
        for (std::size_t n = 0; n < order; ++n) coeffs.push_back(ctx.str(f[n].a));
        return 0;
      });
    }
    checks.push_back(check_gf_tri_squared(order, p));
  } else {
    with_context(p, [&](auto& ctx) {
      const auto f = pochhammer_series(ctx.ring(), d, d + 1, order);
      coeffs.push_back(ctx.str(ctx.from_int(0)));
      for (std::size_t n = 0; n + 1 < order; ++n) coeffs.push_back(ctx.str(f[n].a));
      return 0;
    });
    checks.push_back(check_gf_polytopic(d, order, p));
  }
  if (o.json) {
    json j{{"schema", report_schema}, {"params", p.label()}, {"order", order}, {"coefficients", coeffs},
           {"check", checks.front()}};
    std::cout << j.dump(2) << '\n';
  } else {
    if (p.is_rational()) {
      for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? " " : "") << coeffs[i];
      std::cout << '\n';
    } else {
      for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << "x^" << i << ": " << coeffs[i] << '\n';
    }
    print_claims(checks);
  }
  return claims_exit(checks);
}

OeisRunOptions oeis_options(const Options& o) {
  OeisRunOptions opt;
  opt.fixture_dir = resolve_fixture_dir(o.fixtures.empty() ? std::nullopt : std::optional<std::string>(o.fixtures));
  opt.fetch = o.fetch;
  if (o.max_n) opt.max_index = *o.max_n;
  return opt;
}

void print_oeis(const std::vector<OeisCheckResult>& results) {
  for (const auto& r : results) {
    std::cout << std::left << std::setw(6) << (r.ok() ? "MATCH" : "DIFF") << std::setw(9) << r.id << std::setw(12)
              << r.family << r.matched << "/" << r.compared << " terms  " << r.formula << "  [" << r.provenance << "]\n";
    for (const auto& m : r.mismatches) {
      std::cout << "      a(" << m.index << "): fixture " << m.fixture << ", computed " << m.computed << '\n';
    }
  }
}

int cmd_oeis(const Options& o) {
  auto results = oeis_check_all(o.ids, oeis_options(o));
  if (o.json) {
    Report r;
    r.prec = o.prec;
    r.oeis = results;
    std::cout << serialize(r) << '\n';
  } else {
    print_oeis(results);
  }
  for (const auto& r : results) {
    if (!r.ok()) return exit_mismatch;
  }
  return exit_ok;
}

int cmd_report(const Options& o) {
  ReportOptions opt;
  opt.prec = static_cast<Real::prec_t>(o.prec);
  opt.oeis = oeis_options(o);
  Report r = build_report(opt);
  if (o.json) {
    std::cout << serialize(r) << '\n';
  } else {
    long claims_ok = 0;
    for (const auto& c : r.claims) claims_ok += c.as_expected() ? 1 : 0;
    long numerics_ok = 0;
    for (const auto& n : r.numerics) numerics_ok += n.as_expected() ? 1 : 0;
    std::cout << "exact claims: " << claims_ok << "/" << r.claims.size() << " as expected\n";
    for (const auto& c : r.claims) {
      if (!c.as_expected()) print_claims({c});
    }
    std::cout << "numeric claims: " << numerics_ok << "/" << r.numerics.size() << " as expected\n";
    print_oeis(r.oeis);
    std::cout << "errata:\n";
    for (const auto& e : r.errata) {
      std::cout << "  " << (e.confirmed ? "confirmed  " : "unconfirmed") << " " << e.id << ": printed " << e.printed
                << "; computed " << e.computed << '\n';
    }
  }
  return r.as_expected() ? exit_ok : exit_mismatch;
}

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--s", o.s, "s as an exact rational p/q");
  cmd->add_option("--t", o.t, "t as an exact rational p/q");
  cmd->add_option("--family", o.family, "named specialization, NAME or NAME:arg,...");
  cmd->add_flag("--symbolic", o.symbolic, "work in Z[s,t]");
  cmd->add_flag("--q-symbolic", o.q_symbolic, "work in Z[q] with s = 1 + q, t = -q");
}

void add_output(CLI::App* cmd, Options& o) { cmd->add_flag("--json", o.json, "JSON output"); }

void add_fixtures(CLI::App* cmd, Options& o) {
  cmd->add_option("--fixtures", o.fixtures, "directory of OEIS b-files");
  cmd->add_flag("--fetch", o.fetch, "download b-files from oeis.org before comparing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric tools for (s,t)-Fibonacci polynomials"};
  app.require_subcommand(1);
  Options o;

  auto* seq = app.add_subcommand("seq", "values of {n} and related sequences");
  add_params(seq, o);
  add_output(seq, o);
  seq->add_option("--n", o.n_range, "index or range a..b");
  seq->add_option("--kind", o.kind, "fib, lucas, fibotorial or fibonomial");
  seq->add_option("--d", o.d, "lower index k for --kind fibonomial");

  auto* poly = app.add_subcommand("poly", "simplicial d-polytopic numbers");
  add_params(poly, o);
  add_output(poly, o);
  poly->add_flag("--classic", o.classic, "use s = 2, t = -1");
  poly->add_option("--n", o.n_range, "index or range a..b");
  poly->add_option("--d", o.d, "dimension d");

  auto* verify = app.add_subcommand("verify", "check identities from the claims catalog");
  add_params(verify, o);
  add_output(verify, o);
  verify->add_option("--claim", o.claims, "claim id (repeatable)");
  verify->add_flag("--all", o.all, "every claim admitted by the parameters");
  verify->add_option("--max-n", o.max_n, "largest n");
  verify->add_option("--d", o.d, "largest d");

  auto* sums = app.add_subcommand("sums", "numeric reciprocal sums");
  add_params(sums, o);
  add_output(sums, o);
  sums->add_option("--claim", o.claims, "numeric claim id (repeatable)");
  sums->add_flag("--all", o.all, "the whole numeric suite");
  sums->add_flag("--zeta", o.zeta, "evaluate zeta_{s,t}(z)");
  sums->add_option("--z", o.z, "argument of zeta, an exact rational");
  sums->add_option("--prec", o.prec, "working precision in bits");

  auto* zeta = app.add_subcommand("zeta", "same as sums --zeta");
  add_params(zeta, o);
  add_output(zeta, o);
  zeta->add_option("--z", o.z, "argument of zeta, an exact rational");
  zeta->add_option("--prec", o.prec, "working precision in bits");

  auto* gf = app.add_subcommand("gf", "expand generating functions");
  add_params(gf, o);
  add_output(gf, o);
  gf->add_flag("--classic", o.classic, "use s = 2, t = -1");
  gf->add_option("--d", o.d, "dimension d");
  gf->add_option("--order", o.order, "number of coefficients");
  gf->add_flag("--tri-squared", o.tri_squared, "squared triangular numbers instead");

  auto* oeis = app.add_subcommand("oeis-check", "compare formulas with OEIS b-files");
  add_output(oeis, o);
  add_fixtures(oeis, o);
  oeis->add_option("ids", o.ids, "sequence ids (default: all)");
  oeis->add_option("--max-n", o.max_n, "largest index compared");

  auto* report = app.add_subcommand("report", "full run: claims, sums, fixtures, errata");
  add_output(report, o);
  add_fixtures(report, o);
  report->add_option("--prec", o.prec, "working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_internal;
  }

  try {
    if (seq->parsed()) return cmd_seq(o);
    if (poly->parsed()) return cmd_poly(o);
    if (verify->parsed()) return cmd_verify(o);
    if (sums->parsed()) return cmd_sums(o, false);
    if (zeta->parsed()) return cmd_sums(o, true);
    if (gf->parsed()) return cmd_gf(o);
    if (oeis->parsed()) return cmd_oeis(o);
    if (report->parsed()) return cmd_report(o);
  } catch (const error& e) {
    std::cerr << "stfib: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    std::cerr << "stfib: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_internal;
}
