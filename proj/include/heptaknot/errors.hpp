#pragma once

#include <stdexcept>
#include <string>

namespace heptaknot {

enum class ErrorCode {
  parse_error,
  validation,
  too_few_points,
  collinear_triangle,
  degenerate_input,
  exhausted_candidates,
  non_generic_direction,
  not_a_knot,
  not_two_components,
  unsupported_size,
  sampling_failure,
  agreement_failure,
  unexpected_determinant,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when the two independent classifiers disagree on a polygon.
// Carries a self-contained JSON repro case (points + cycle + verdicts).
class AgreementError : public Error {
 public:
  AgreementError(const std::string& message, std::string repro_json)
      : Error(ErrorCode::agreement_failure, message),
        repro_json_(std::move(repro_json)) {}

  const std::string& repro_json() const { return repro_json_; }

 private:
  std::string repro_json_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace heptaknot
