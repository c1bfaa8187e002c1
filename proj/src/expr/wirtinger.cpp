#include "crsys/expr/wirtinger.hpp"

#include "crsys/expr/eval.hpp"

namespace crsys::expr {

namespace {

bool matches(const Node& n, const WirtingerVar& var) {
    if (var.is_z) return n.op == Op::Z;
    return n.op == Op::D && n.var == var.d;
}

}  // namespace

Expr wirtinger_derive(const Expr& e, const WirtingerVar& var, bool conjugate) {
    const Node& n = *e;
    auto d = [&](const Expr& a) { return wirtinger_derive(a, var, conjugate); };
    switch (n.op) {
        case Op::Const:
            return constant(0.0);
        case Op::Z:
        case Op::D:
            return constant(matches(n, var) && !conjugate ? 1.0 : 0.0);
        case Op::Neg:
            return unary(Op::Neg, d(n.args[0]));
        case Op::Add:
            return d(n.args[0]) + d(n.args[1]);
        case Op::Sub:
            return d(n.args[0]) - d(n.args[1]);
        case Op::Mul:
            return d(n.args[0]) * n.args[1] + n.args[0] * d(n.args[1]);
        case Op::Div: {
            const Expr& f = n.args[0];
            const Expr& g = n.args[1];
            return (d(f) * g - f * d(g)) / power(g, 2);
        }
        case Op::Pow:
            return constant(static_cast<double>(n.exponent)) * power(n.args[0], n.exponent - 1) * d(n.args[0]);
        case Op::Conj:
            // d/dw conj(f) = conj(d f / d wbar)
            return unary(Op::Conj, wirtinger_derive(n.args[0], var, !conjugate));
        case Op::Re: {
            const Expr& w = n.args[0];
            return d((w + unary(Op::Conj, w)) / constant(2.0));
        }
        case Op::Im: {
            const Expr& w = n.args[0];
            return d((w - unary(Op::Conj, w)) / constant({0.0, 2.0}));
        }
        case Op::Exp:
            return e * d(n.args[0]);
        case Op::Log:
            return d(n.args[0]) / n.args[0];
    }
    return constant(0.0);
}

core::Jet sample_jet(const Expr& e, const core::GridPtr& grid, int order) {
    if (order < 0) throw InvalidArgument("sample_jet: negative order");
    std::vector<core::Field> entries(core::Jet::entry_count(order));
    // Walk the entries so that each derivative is taken once from its neighbour.
    std::vector<Expr> by_order{e};
    entries[0] = sample(e, grid);
    for (int p = 1; p <= order; ++p) {
        std::vector<Expr> next;
        for (int j = 0; j < p; ++j) next.push_back(wirtinger_derive(by_order[j], WirtingerVar::z_var(), false));
        next.push_back(wirtinger_derive(by_order[p - 1], WirtingerVar::z_var(), true));
        for (int j = 0; j <= p; ++j) entries[core::Jet::index(p - j, j)] = sample(next[j], grid);
        by_order = std::move(next);
    }
    return core::Jet(order, std::move(entries));
}

}  // namespace crsys::expr
