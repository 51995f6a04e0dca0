#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gzeta {

enum class ErrorCode {
  invalid_parameter,
  generation_failure,
  not_regular,
  outside_domain,
  unsupported_graph,
  no_convergence,
  budget_exceeded,
  dimension_too_large,
  unknown_identity,
  malformed_input,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::generation_failure: return "generation-failure";
    case ErrorCode::not_regular: return "not-regular";
    case ErrorCode::outside_domain: return "outside-domain";
    case ErrorCode::unsupported_graph: return "unsupported-graph";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::budget_exceeded: return "enumeration-budget-exceeded";
    case ErrorCode::dimension_too_large: return "dimension-too-large";
    case ErrorCode::unknown_identity: return "unknown-identity";
    case ErrorCode::malformed_input: return "malformed-input";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gzeta
