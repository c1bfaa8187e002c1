#pragma once

#include "crsys/solver/problem.hpp"

namespace crsys::solver {

/// Result of moving prescribed initial data into the right-hand side.
struct ShiftResult {
    ProblemSpec shifted;
    /// p_j = sum c_{i,k} / (i! k!) z^i zbar^k, so that d^i dbar^k p(0) = c_{i,k}.
    std::vector<core::Polynomial> p;

    /// u = u_tilde + p, jet included.
    core::Jet recombine(const core::Jet& u_tilde) const;
};

/// Rewrites a(z, u, ...) as b(z, v, ...) = a(z, v + p, D^1 v + D^1 p, ...)
/// whose solutions v with zero jet give u = v + p with the prescribed jet.
ShiftResult shift_initial_values(const ProblemSpec& spec);

/// The polynomial as an expression in z and conj(z).
expr::Expr to_expr(const core::Polynomial& p);

}  // namespace crsys::solver
