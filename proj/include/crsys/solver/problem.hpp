#pragma once

#include <map>
#include <utility>
#include <vector>

#include "crsys/core/jet.hpp"
#include "crsys/core/polynomial.hpp"
#include "crsys/expr/ast.hpp"

namespace crsys::solver {

using core::cplx;

/// The system d^mu dbar^nu u = a(z, u, D^1 u, ..., D^{m-1} u) on a disk,
/// with u: D -> C^n and prescribed derivatives at 0.
struct ProblemSpec {
    int m = 1;
    int mu = 0;
    int nu = 1;
    int n = 1;
    double alpha = 0.5;
    /// One right-hand side per component, in the expression DSL.
    std::vector<expr::Expr> rhs;
    /// (i, j) -> d^i dbar^j u(0) per component, for i + j <= m - 1.
    /// Missing entries are zero.
    std::map<std::pair<int, int>, std::vector<cplx>> initial_jet;
    /// Homogeneous degree-m seed per component (empty means zero).
    std::vector<core::Polynomial> psi;
    /// Lets the right-hand side read order-m derivatives. Such problems are
    /// not covered by the contraction argument; used for the non-contraction demo.
    bool allow_top_order = false;

    /// Throws InvalidArgument on any violated constraint.
    void validate() const;

    /// Highest derivative order the right-hand side may reference.
    int rhs_order() const { return allow_top_order ? m : m - 1; }
    bool has_zero_jet() const;
    cplx jet_value(int i, int j, int comp) const;
    core::Polynomial psi_component(int comp) const;
};

/// Pointwise a(z, u, ...) from a jet of u that covers rhs_order().
/// Throws expr::EvalError (with the node index in the message) on domain errors.
core::Field evaluate_rhs(const ProblemSpec& spec, const core::Jet& u);

/// a evaluated at z = 0 with all derivative slots set to zero.
std::vector<cplx> rhs_at_origin(const ProblemSpec& spec);

}  // namespace crsys::solver
