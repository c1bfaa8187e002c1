#pragma once

#include <vector>

#include "crsys/core/field.hpp"
#include "crsys/expr/ast.hpp"

namespace crsys::expr {

/// Binding of z and of the derivatives d(j,i,k) with i+k <= order, j < n.
class Env {
public:
    Env() = default;
    Env(int n_components, int order);

    cplx z{};

    void set(DVar v, cplx value);
    cplx get(DVar v, std::size_t offset = 0) const;
    bool binds(DVar v) const;

    int n_components() const { return n_; }
    int order() const { return order_; }

private:
    std::size_t slot(DVar v) const;

    int n_ = 0;
    int order_ = -1;
    std::vector<cplx> values_;
};

/// Evaluates with principal-branch log; throws EvalError on domain errors.
cplx eval(const Expr& e, const Env& env);

/// Pointwise evaluation of an expression in z alone at every grid node.
core::Field sample(const Expr& e, const core::GridPtr& grid);

}  // namespace crsys::expr
