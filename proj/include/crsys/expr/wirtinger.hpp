#pragma once

#include "crsys/core/jet.hpp"
#include "crsys/expr/ast.hpp"

namespace crsys::expr {

/// Differentiation target: either z itself or one derivative slot d(j,i,k).
struct WirtingerVar {
    bool is_z = false;
    DVar d{};

    static WirtingerVar z_var() { return {true, {}}; }
    static WirtingerVar of(DVar v) { return {false, v}; }
};

/// Symbolic d/dw (conjugate = false) or d/dwbar (conjugate = true), treating
/// w and conj(w) as independent variables.
Expr wirtinger_derive(const Expr& e, const WirtingerVar& var, bool conjugate);

/// Jet of an expression in z alone, from symbolic derivatives in z and zbar.
core::Jet sample_jet(const Expr& e, const core::GridPtr& grid, int order);

}  // namespace crsys::expr
