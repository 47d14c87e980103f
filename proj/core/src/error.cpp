#include "bfa/error.hpp"

namespace bfa {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_focal: return "EmptyFocal";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::non_positive_mass: return "NonPositiveMass";
    case ErrorCode::frame_mismatch: return "FrameMismatch";
    case ErrorCode::frame_too_large: return "FrameTooLarge";
    case ErrorCode::not_a_belief_function: return "NotABeliefFunction";
    case ErrorCode::total_conflict: return "TotalConflict";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::bad_arguments: return "BadArguments";
    case ErrorCode::too_many_focals: return "TooManyFocals";
    case ErrorCode::not_focal: return "NotFocal";
    case ErrorCode::optimal_infeasible: return "OptimalInfeasible";
    case ErrorCode::missing_optimal: return "MissingOptimal";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_method: return "UnknownMethod";
  }
  return "Error";
}

}  // namespace bfa
