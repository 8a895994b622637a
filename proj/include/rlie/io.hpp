#pragma once

#include <filesystem>
#include <string>

#include "rlie/lie_algebra.hpp"
#include "rlie/module.hpp"

namespace rlie {

/// Raised when a file parses but describes an invalid algebra or module.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Algebra files are JSON:
///   {"name": "aff2_F3", "p": 3, "basis": ["x", "y"],
///    "brackets": {"x,y": {"y": 1}}, "pmap": {"x": {"x": 1}}}
/// Bracket keys name a pair of basis labels; a reversed pair is read with a sign.
/// Absent entries are zero, coefficients are reduced mod p. The parsed algebra is validated.
RestrictedLieAlgebra parse_algebra(const std::string& text);
/// Canonical form: basis order, nonzero entries only; parse_algebra(serialize_algebra(l)) == l.
std::string serialize_algebra(const RestrictedLieAlgebra& l);

/// Module files: {"label": "S", "dim": 2, "action": {"x": [[0, 1], [1, 0]], ...}}.
/// With restricted=false only the bracket relations are checked.
RestrictedModule parse_module(const std::string& text, const RestrictedLieAlgebra& l, bool restricted = true);
std::string serialize_module(const RestrictedModule& m, const RestrictedLieAlgebra& l);

std::string read_file(const std::filesystem::path& path);
RestrictedLieAlgebra load_algebra(const std::filesystem::path& path);

bool same_structure(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);

}  // namespace rlie
