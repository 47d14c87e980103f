#pragma once

#include <filesystem>
#include <string>

#include "bfa/mass.hpp"

namespace bfa {

/// Parses the interchange document
///   {"frame": ["a","b"], "masses": [{"set": ["a"], "mass": 0.5}, ...]}
/// Malformed documents raise parse_error naming the offending entry index;
/// normalization failures raise the usual mass-function errors.
MassFunction parse_mass_function(const std::string& text, double eps = kMassEpsilon);

MassFunction load_mass_function(const std::filesystem::path& path,
                                double eps = kMassEpsilon);

/// Serializes in the same schema, focal elements in ascending bit-pattern
/// order and set members in frame order.
std::string mass_function_to_json(const MassFunction& m, int indent = -1);

void save_mass_function(const MassFunction& m, const std::filesystem::path& path);

}  // namespace bfa
