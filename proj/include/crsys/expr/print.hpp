#pragma once

#include <string>

#include "crsys/expr/ast.hpp"

namespace crsys::expr {

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Source text that parses back to an equivalent expression. Literals use
/// round-trip formatting, so evaluation after re-parsing is bitwise equal.
std::string print(const Expr& e);

}  // namespace crsys::expr
