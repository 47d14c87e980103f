#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bfa {

/// Error categories raised by the library. Each maps to one failure mode of
/// the public operations; the CLI reports them as validation errors.
enum class ErrorCode {
  empty_focal,
  not_normalized,
  non_positive_mass,
  frame_mismatch,
  frame_too_large,
  not_a_belief_function,
  total_conflict,
  length_mismatch,
  bad_arguments,
  too_many_focals,
  not_focal,
  optimal_infeasible,
  missing_optimal,
  parse_error,
  unknown_method,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bfa
