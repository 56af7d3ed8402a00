#pragma once

// OEIS b-file fixtures: parsing, lookup, optional download, and comparison
// against the sequence formulas computed by the library.

#include <gmpxx.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stfib/error.hpp"
#include "stfib/fib.hpp"
#include "stfib/registry.hpp"

#ifdef STFIB_ENABLE_FETCH
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"
#endif

#ifndef STFIB_DEFAULT_FIXTURE_DIR
#define STFIB_DEFAULT_FIXTURE_DIR "data/oeis"
#endif

namespace stfib {

struct BFile {
  std::string id;
  std::vector<std::pair<long, mpz_class>> terms;  // strictly increasing indices
};

/// Lines "index value"; blank lines and lines starting with '#' are skipped.
inline BFile parse_bfile(std::istream& in, std::string id) {
  BFile b{std::move(id), {}};
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    long index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw error(errc::parse_error, b.id + " line " + std::to_string(line_no) + ": expected 'index value'");
    }
    mpz_class v;
    if (v.set_str(value, 10) != 0) {
      throw error(errc::parse_error, b.id + " line " + std::to_string(line_no) + ": bad integer '" + value + "'");
    }
    if (!b.terms.empty() && index <= b.terms.back().first) {
      throw error(errc::parse_error, b.id + " line " + std::to_string(line_no) + ": indices must increase");
    }
    b.terms.emplace_back(index, std::move(v));
  }
  return b;
}

/// How a sequence id relates to the library: a(m) = {m + shift} when
/// dimension is 0, otherwise simplicial(m + shift, dimension).
struct OeisSequence {
  std::string id;
  std::string family;
  long dimension = 0;
  long shift = 0;
  std::string formula;
};

inline const std::vector<OeisSequence>& oeis_sequences() {
  static const std::vector<OeisSequence> seqs = {
      {"A000045", "fibonacci", 0, 0, "F(n)"},
      {"A000129", "pell", 0, 0, "P(n)"},
      {"A001045", "jacobsthal", 0, 0, "J(n)"},
      {"A000225", "mersenne", 0, 0, "2^n - 1"},
      {"A001654", "fibonacci", 2, 0, "F(n) F(n+1)"},
      {"A084158", "pell", 2, 0, "P(n) P(n+1) / 2"},
      {"A084175", "jacobsthal", 2, 0, "J(n) J(n+1)"},
      {"A006095", "mersenne", 2, -1, "[n,2] at q = 2"},
      {"A001655", "fibonacci", 3, 1, "F(n+1) F(n+2) F(n+3) / 2"},
      {"A099930", "pell", 3, 1, "P(n+1) P(n+2) P(n+3) / 10"},
      {"A006096", "mersenne", 3, -2, "[n,3] at q = 2"},
  };
  return seqs;
}

inline const OeisSequence& find_oeis_sequence(const std::string& id) {
  for (const auto& s : oeis_sequences()) {
    if (s.id == id) return s;
  }
  throw error(errc::unknown_name, "no formula attached to " + id);
}

/// The library's value for index m of `seq`.
inline mpq_class oeis_compute(const OeisSequence& seq, RationalContext& ctx, long m) {
  const long n = m + seq.shift;
  if (n < 0) return 0;
  if (seq.dimension == 0) return ctx.fib(static_cast<std::size_t>(n));
  return ctx.simplicial(n, seq.dimension);
}

struct Fixture {
  BFile file;
  std::string provenance;  // "bundled", "fetched <time>", ...
  std::filesystem::path path;
};

inline std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

/// --fixtures, then $STFIB_FIXTURES, then the compiled-in directory.
inline std::filesystem::path resolve_fixture_dir(const std::optional<std::string>& cli = std::nullopt) {
  if (cli && !cli->empty()) return *cli;
  if (const char* env = std::getenv("STFIB_FIXTURES"); env != nullptr && *env != '\0') return env;
  return STFIB_DEFAULT_FIXTURE_DIR;
}

inline Fixture load_fixture_file(const std::string& id, const std::filesystem::path& path, std::string provenance) {
  std::ifstream in(path);
  if (!in) throw error(errc::missing_fixture, "no b-file for " + id + " at " + path.string());
  return {parse_bfile(in, id), std::move(provenance), path};
}

inline Fixture load_fixture(const std::string& id, const std::filesystem::path& dir) {
  return load_fixture_file(id, dir / bfile_name(id), "bundled");
}

inline std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "stfib" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "stfib" / "oeis";
  }
  return std::filesystem::temp_directory_path() / "stfib-oeis";
}

inline bool fetch_supported() {
#ifdef STFIB_ENABLE_FETCH
  return true;
#else
  return false;
#endif
}

/// Download the b-file for `id` into `cache_dir` and load it.
inline Fixture fetch_fixture(const std::string& id, const std::filesystem::path& cache_dir) {
#ifdef STFIB_ENABLE_FETCH
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const char* proxy = std::getenv("HTTPS_PROXY");
  if (proxy == nullptr) proxy = std::getenv("https_proxy");
  if (proxy != nullptr && *proxy != '\0') {
    std::string p = proxy;
    if (auto scheme = p.find("://"); scheme != std::string::npos) p = p.substr(scheme + 3);
    if (!p.empty() && p.back() == '/') p.pop_back();
    const auto colon = p.rfind(':');
    if (colon != std::string::npos) client.set_proxy(p.substr(0, colon), std::stoi(p.substr(colon + 1)));
  }
  auto res = client.Get("/" + id + "/" + bfile_name(id));
  if (!res) throw error(errc::fetch_failed, id + ": " + httplib::to_string(res.error()));
  if (res->status != 200) throw error(errc::fetch_failed, id + ": HTTP " + std::to_string(res->status));
  std::filesystem::create_directories(cache_dir);
  const auto path = cache_dir / bfile_name(id);
  {
    std::ofstream out(path, std::ios::binary);
    out << res->body;
    if (!out) throw error(errc::fetch_failed, id + ": cannot write " + path.string());
  }
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return load_fixture_file(id, path, std::string("fetched ") + stamp);
#else
  (void)cache_dir;
  throw error(errc::fetch_disabled, id + ": built without the fetch client");
#endif
}

struct OeisMismatch {
  long index = 0;
  std::string fixture;
  std::string computed;

  friend bool operator==(const OeisMismatch&, const OeisMismatch&) = default;
};

struct OeisCheckResult {
  std::string id;
  std::string family;
  std::string formula;
  std::string provenance;
  long compared = 0;
  long matched = 0;
  std::vector<OeisMismatch> mismatches;  // first few only

  bool ok() const { return compared > 0 && matched == compared; }

  friend bool operator==(const OeisCheckResult&, const OeisCheckResult&) = default;
};

/// Compare every fixture term with index <= max_index against the formula.
inline OeisCheckResult oeis_check(const OeisSequence& seq, const Fixture& fixture, long max_index = 200) {
  OeisCheckResult r{seq.id, seq.family, seq.formula, fixture.provenance, 0, 0, {}};
  auto ctx = make_rational_context(spec_lookup(seq.family));
  for (const auto& [index, value] : fixture.file.terms) {
    if (index > max_index) break;
    const mpq_class computed = oeis_compute(seq, ctx, index);
    ++r.compared;
    if (computed.get_den() == 1 && computed.get_num() == value) {
      ++r.matched;
    } else if (r.mismatches.size() < 5) {
      r.mismatches.push_back({index, value.get_str(), computed.get_str()});
    }
  }
  return r;
}

struct OeisRunOptions {
  std::filesystem::path fixture_dir = resolve_fixture_dir();
  bool fetch = false;
  std::filesystem::path cache_dir = default_cache_dir();
  long max_index = 200;
};

/// Check the given ids (all known ids when empty). With `fetch`, a failed
/// download falls back to the bundled fixture and says so in the provenance.
inline std::vector<OeisCheckResult> oeis_check_all(std::vector<std::string> ids, const OeisRunOptions& opt) {
  if (ids.empty()) {
    for (const auto& s : oeis_sequences()) ids.push_back(s.id);
  }
  std::vector<OeisCheckResult> out;
  for (const auto& id : ids) {
    const OeisSequence& seq = find_oeis_sequence(id);
    std::optional<Fixture> fixture;
    std::string fallback;
    if (opt.fetch) {
      try {
        fixture = fetch_fixture(id, opt.cache_dir);
      } catch (const error& e) {
        if (e.kind() == errc::fetch_disabled) throw;
        fallback = std::string(" (") + e.what() + ")";
      }
    }
    if (!fixture) {
      fixture = load_fixture(id, opt.fixture_dir);
      if (!fallback.empty()) fixture->provenance += fallback;
    }
    out.push_back(oeis_check(seq, *fixture, opt.max_index));
  }
  return out;
}

}  // namespace stfib
