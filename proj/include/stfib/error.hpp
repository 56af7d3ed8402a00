#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stfib {

enum class errc {
  not_divisible,
  negative_discriminant,
  invalid_params,
  internal_mismatch,
  unknown_name,
  domain_violation,
  non_unit_constant_term,
  non_convergent,
  zero_term,
  domain_error,
  missing_fixture,
  fetch_disabled,
  fetch_failed,
  parse_error,
};

constexpr std::string_view errc_name(errc e) noexcept {
  switch (e) {
    case errc::not_divisible: return "NotDivisible";
    case errc::negative_discriminant: return "NegativeDiscriminant";
    case errc::invalid_params: return "InvalidParams";
    case errc::internal_mismatch: return "InternalMismatch";
    case errc::unknown_name: return "UnknownName";
    case errc::domain_violation: return "DomainViolation";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::non_convergent: return "NonConvergent";
    case errc::zero_term: return "ZeroTerm";
    case errc::domain_error: return "DomainError";
    case errc::missing_fixture: return "MissingFixture";
    case errc::fetch_disabled: return "FetchDisabled";
    case errc::fetch_failed: return "FetchFailed";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// kind is what callers (tests, CLI exit codes) dispatch on.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

}  // namespace stfib
