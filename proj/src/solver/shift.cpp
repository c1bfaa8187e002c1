#include "crsys/solver/shift.hpp"

#include "crsys/core/cmath.hpp"

namespace crsys::solver {

expr::Expr to_expr(const core::Polynomial& p) {
    expr::Expr out = expr::constant(0.0);
    for (const auto& [e, c] : p.terms()) {
        expr::Expr term = expr::constant(c);
        if (e.first > 0) term = term * expr::power(expr::var_z(), e.first);
        if (e.second > 0) term = term * expr::power(expr::unary(expr::Op::Conj, expr::var_z()), e.second);
        out = out + term;
    }
    return out;
}

core::Jet ShiftResult::recombine(const core::Jet& u_tilde) const {
    return u_tilde + core::polynomial_jet(p, u_tilde.grid_ptr(), u_tilde.order());
}

ShiftResult shift_initial_values(const ProblemSpec& spec) {
    spec.validate();
    ShiftResult out{spec, std::vector<core::Polynomial>(spec.n)};
    for (int c = 0; c < spec.n; ++c) {
        for (int p = 0; p <= spec.m - 1; ++p) {
            for (int j = 0; j <= p; ++j) {
                const int i = p - j;
                out.p[c].add_term(i, j, spec.jet_value(i, j, c) / (core::factorial(i) * core::factorial(j)));
            }
        }
    }
    if (spec.has_zero_jet()) return out;

    auto replace = [&](const expr::DVar& v) -> std::optional<expr::Expr> {
        const core::Polynomial d = out.p[v.comp].derivative(v.di, v.dbar);
        if (d.is_zero()) return std::nullopt;
        return expr::var_d(v) + to_expr(d);
    };
    for (auto& a : out.shifted.rhs) a = expr::substitute(a, replace);
    out.shifted.initial_jet.clear();
    return out;
}

}  // namespace crsys::solver
