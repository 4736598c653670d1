#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagrangia {

enum class errc {
  dimension,
  not_fibered,
  degenerate_curve,
  convention_violation,
  invalid_seifert_data,
  basis_mismatch,
  division_by_zero,
  non_embeddable,
  untracked_class,
  hypothesis_unmet,
  no_curves,
  unusable_direction,
  degenerate_family,
  idempotence,
  inconsistent_state,
  invalid_argument,
  catalog,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::dimension: return "dimension error";
    case errc::not_fibered: return "not fibered";
    case errc::degenerate_curve: return "degenerate curve";
    case errc::convention_violation: return "convention violation";
    case errc::invalid_seifert_data: return "invalid Seifert data";
    case errc::basis_mismatch: return "basis mismatch";
    case errc::division_by_zero: return "division by zero";
    case errc::non_embeddable: return "non-embeddable exponent";
    case errc::untracked_class: return "untracked class";
    case errc::hypothesis_unmet: return "hypothesis unmet";
    case errc::no_curves: return "no curves";
    case errc::unusable_direction: return "unusable direction";
    case errc::degenerate_family: return "degenerate family";
    case errc::idempotence: return "idempotence error";
    case errc::inconsistent_state: return "inconsistent state";
    case errc::invalid_argument: return "invalid argument";
    case errc::catalog: return "catalog error";
  }
  return "unknown error";
}

/// All library failures are reported through this type; `code()` tells
/// callers which contract was broken.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace lagrangia
