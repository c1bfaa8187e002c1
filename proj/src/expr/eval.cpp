#include "crsys/expr/eval.hpp"

#include <string>

#include "crsys/core/cmath.hpp"
#include "crsys/core/jet.hpp"

namespace crsys::expr {

Env::Env(int n_components, int order)
    : n_(n_components), order_(order), values_(n_components * core::Jet::entry_count(order)) {}

std::size_t Env::slot(DVar v) const {
    return static_cast<std::size_t>(v.comp) * core::Jet::entry_count(order_) + core::Jet::index(v.di, v.dbar);
}

bool Env::binds(DVar v) const {
    return v.comp >= 0 && v.comp < n_ && v.di >= 0 && v.dbar >= 0 && v.order() <= order_;
}

void Env::set(DVar v, cplx value) {
    if (!binds(v)) throw InvalidArgument("Env::set: variable outside the bound range");
    values_[slot(v)] = value;
}

cplx Env::get(DVar v, std::size_t offset) const {
    if (!binds(v)) {
        throw EvalError("unbound variable d(" + std::to_string(v.comp) + "," + std::to_string(v.di) + "," +
                            std::to_string(v.dbar) + ")",
                        offset);
    }
    return values_[slot(v)];
}

cplx eval(const Expr& e, const Env& env) {
    const Node& n = *e;
    switch (n.op) {
        case Op::Const:
            return n.value;
        case Op::Z:
            return env.z;
        case Op::D:
            return env.get(n.var, n.offset);
        case Op::Neg:
            return -eval(n.args[0], env);
        case Op::Add:
            return eval(n.args[0], env) + eval(n.args[1], env);
        case Op::Sub:
            return eval(n.args[0], env) - eval(n.args[1], env);
        case Op::Mul:
            return eval(n.args[0], env) * eval(n.args[1], env);
        case Op::Div: {
            const cplx den = eval(n.args[1], env);
            if (den == cplx{}) throw EvalError("division by zero", n.offset);
            return eval(n.args[0], env) / den;
        }
        case Op::Pow: {
            const cplx base = eval(n.args[0], env);
            if (n.exponent < 0 && base == cplx{}) throw EvalError("division by zero in negative power", n.offset);
            return core::ipow(base, n.exponent);
        }
        case Op::Conj:
            return std::conj(eval(n.args[0], env));
        case Op::Re:
            return eval(n.args[0], env).real();
        case Op::Im:
            return eval(n.args[0], env).imag();
        case Op::Exp:
            return std::exp(eval(n.args[0], env));
        case Op::Log: {
            const cplx w = eval(n.args[0], env);
            if (w == cplx{}) throw EvalError("log of zero", n.offset);
            return std::log(w);
        }
    }
    throw EvalError("unknown node", n.offset);
}

core::Field sample(const Expr& e, const core::GridPtr& grid) {
    if (!free_vars(e).empty()) throw InvalidArgument("sample: expression must depend on z only");
    core::Field out(grid, 1);
    Env env;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        env.z = grid->node(i);
        out(i) = eval(e, env);
    }
    return out;
}

}  // namespace crsys::expr
