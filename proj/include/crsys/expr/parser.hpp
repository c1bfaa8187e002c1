#pragma once

#include <map>
#include <string>
#include <string_view>

#include "crsys/expr/ast.hpp"

namespace crsys::expr {

/// Named sub-expressions that may appear as bare identifiers in the source.
using Definitions = std::map<std::string, Expr, std::less<>>;

/// Parses the right-hand-side DSL.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := number | 'i' | 'z' | 'u' digits | 'd' '(' int ',' int ',' int ')'
///            | func '(' expr ')' | '(' expr ')' | name
///   func    := 'conj' | 're' | 'im' | 'exp' | 'log'
///
/// `name` must be a key of `defs`; its expression is inlined.
Expr parse(std::string_view source, const Definitions& defs = {});

}  // namespace crsys::expr
