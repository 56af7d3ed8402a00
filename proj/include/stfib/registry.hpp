#pragma once

// Named specializations of (s, t).

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stfib/error.hpp"
#include "stfib/params.hpp"

namespace stfib {

struct SpecEntry {
  std::string name;
  std::string description;
  std::vector<std::string> arg_names;  // empty for fixed specializations
  std::function<Params(std::span<const mpq_class>)> make;
  std::string seq_oeis;          // {n}
  std::string triangular_oeis;   // {n+1 choose 2}
  std::string tetrahedral_oeis;  // {n+2 choose 3}
};

inline const std::vector<SpecEntry>& registry() {
  static const std::vector<SpecEntry> entries = [] {
    auto fixed = [](const char* name, long s, long t) {
      return [name, s, t](std::span<const mpq_class>) { return Params::rational(s, t, name); };
    };
    std::vector<SpecEntry> e;
    e.push_back({"natural", "{n} = n, the positive integers", {}, fixed("natural", 2, -1), "", "", ""});
    e.push_back({"fibonacci", "Fibonacci numbers F_n", {}, fixed("fibonacci", 1, 1), "A000045", "A001654", "A001655"});
    e.push_back({"pell", "Pell numbers P_n", {}, fixed("pell", 2, 1), "A000129", "A084158", "A099930"});
    e.push_back({"jacobsthal", "Jacobsthal numbers J_n", {}, fixed("jacobsthal", 1, 2), "A001045", "A084175", ""});
    e.push_back({"mersenne", "Mersenne numbers 2^n - 1", {}, fixed("mersenne", 3, -2), "A000225", "A006095", "A006096"});
    e.push_back({"pq", "(p,q)-numbers: s = p + q, t = -pq", {"p", "q"},
                 [](std::span<const mpq_class> a) { return Params::rational(a[0] + a[1], -a[0] * a[1], "pq"); }, "",
                 "", ""});
    e.push_back({"qnumber", "q-numbers: s = 1 + q, t = -q", {"q"},
                 [](std::span<const mpq_class> a) { return Params::rational(1 + a[0], -a[0], "qnumber"); }, "", "",
                 ""});
    e.push_back({"chebyshev", "Chebyshev U_{n-1}(tau): s = 2 tau, t = -1", {"tau"},
                 [](std::span<const mpq_class> a) { return Params::rational(2 * a[0], -1, "chebyshev"); }, "", "",
                 ""});
    return e;
  }();
  return entries;
}

inline const SpecEntry& find_spec(const std::string& name) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const SpecEntry& e) { return e.name == name; });
  if (it == reg.end()) throw error(errc::unknown_name, "no specialization named '" + name + "'");
  return *it;
}

inline Params spec_lookup(const std::string& name, std::span<const mpq_class> args = {}) {
  const SpecEntry& entry = find_spec(name);
  if (args.size() != entry.arg_names.size()) {
    throw error(errc::invalid_params, "'" + name + "' takes " + std::to_string(entry.arg_names.size()) +
                                          " argument(s), got " + std::to_string(args.size()));
  }
  return entry.make(args);
}

}  // namespace stfib
