#pragma once

#include <string>

#include "algroup/algebra.hpp"

namespace algroup {

// Builtin specs: "u:n:q", "trunc:q:m", "pattern:q:i-j,k-l,...".
bool looks_like_builtin(const std::string& spec);
Algebra parse_builtin(const std::string& spec);

// Structured text file: directives "p", "e", "modulus", "dim", "name" and
// sparse product lines "i j -> k:c k:c ..." (1-based indices, field-element
// literals as packed integers in [0, q)); omitted products are zero. Errors
// carry file and line context.
Algebra parse_algebra_file(const std::string& path);

// Builtin spec when it matches one, file path otherwise.
Algebra load_algebra(const std::string& arg);

}  // namespace algroup
