#include "crsys/expr/ast.hpp"

#include <string>

#include "crsys/expr/eval.hpp"

namespace crsys::expr {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset), message_(what) {}

EvalError::EvalError(const std::string& what, std::size_t offset)
    : Error("evaluation error at offset " + std::to_string(offset) + ": " + what), offset_(offset), message_(what) {}

namespace {

Expr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_value(const Expr& e, cplx v) { return e->op == Op::Const && e->value == v; }

// Folds a node whose operands are all constants. Returns null when folding
// would raise, so the error surfaces at evaluation time with its offset.
Expr try_fold(const Node& n) {
    for (const auto& a : n.args) {
        if (a->op != Op::Const) return nullptr;
    }
    try {
        const cplx v = eval(make(n), Env{});
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return nullptr;
        return constant(v, n.offset);
    } catch (const EvalError&) {
        return nullptr;
    }
}

}  // namespace

Expr constant(cplx c, std::size_t offset) {
    Node n;
    n.op = Op::Const;
    n.value = c;
    n.offset = offset;
    return make(std::move(n));
}

Expr var_z(std::size_t offset) {
    Node n;
    n.op = Op::Z;
    n.offset = offset;
    return make(std::move(n));
}

Expr var_d(DVar v, std::size_t offset) {
    if (v.comp < 0 || v.di < 0 || v.dbar < 0) throw InvalidArgument("var_d: negative index");
    Node n;
    n.op = Op::D;
    n.var = v;
    n.offset = offset;
    return make(std::move(n));
}

Expr unary(Op op, Expr a, std::size_t offset) {
    if (op == Op::Neg && a->op == Op::Neg) return a->args[0];
    if (op == Op::Conj && a->op == Op::Conj) return a->args[0];
    Node n;
    n.op = op;
    n.args = {std::move(a)};
    n.offset = offset;
    if (auto folded = try_fold(n)) return folded;
    return make(std::move(n));
}

Expr binary(Op op, Expr a, Expr b, std::size_t offset) {
    switch (op) {
        case Op::Add:
            if (is_zero(a)) return b;
            if (is_zero(b)) return a;
            break;
        case Op::Sub:
            if (is_zero(b)) return a;
            if (is_zero(a)) return unary(Op::Neg, std::move(b), offset);
            break;
        case Op::Mul:
            if (is_zero(a) || is_zero(b)) return constant(0.0, offset);
            if (is_value(a, 1.0)) return b;
            if (is_value(b, 1.0)) return a;
            break;
        case Op::Div:
            if (is_value(b, 1.0)) return a;
            break;
        default:
            break;
    }
    Node n;
    n.op = op;
    n.args = {std::move(a), std::move(b)};
    n.offset = offset;
    if (auto folded = try_fold(n)) return folded;
    return make(std::move(n));
}

Expr power(Expr a, int exponent, std::size_t offset) {
    if (exponent == 0) return constant(1.0, offset);
    if (exponent == 1) return a;
    Node n;
    n.op = Op::Pow;
    n.exponent = exponent;
    n.args = {std::move(a)};
    n.offset = offset;
    if (auto folded = try_fold(n)) return folded;
    return make(std::move(n));
}

bool is_constant(const Expr& e) { return e->op == Op::Const; }
bool is_zero(const Expr& e) { return is_value(e, 0.0); }

namespace {

void collect(const Expr& e, std::set<DVar>& out, bool& has_z) {
    if (e->op == Op::D) out.insert(e->var);
    if (e->op == Op::Z) has_z = true;
    for (const auto& a : e->args) collect(a, out, has_z);
}

}  // namespace

std::set<DVar> free_vars(const Expr& e) {
    std::set<DVar> out;
    bool has_z = false;
    collect(e, out, has_z);
    return out;
}

bool references_z(const Expr& e) {
    std::set<DVar> vars;
    bool has_z = false;
    collect(e, vars, has_z);
    return has_z;
}

Expr substitute(const Expr& e, const std::function<std::optional<Expr>(const DVar&)>& replace) {
    switch (e->op) {
        case Op::Const:
        case Op::Z:
            return e;
        case Op::D: {
            auto r = replace(e->var);
            return r ? *r : e;
        }
        case Op::Pow:
            return power(substitute(e->args[0], replace), e->exponent, e->offset);
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
            return binary(e->op, substitute(e->args[0], replace), substitute(e->args[1], replace), e->offset);
        default:
            return unary(e->op, substitute(e->args[0], replace), e->offset);
    }
}

void check_vars(const Expr& e, int n, int max_order) {
    for (const auto& v : free_vars(e)) {
        if (v.comp >= n) {
            throw InvalidArgument("expression references component " + std::to_string(v.comp) +
                                        " but the system has " + std::to_string(n));
        }
        if (v.order() > max_order) {
            throw InvalidArgument("expression references derivative order " + std::to_string(v.order()) +
                                        " above the allowed " + std::to_string(max_order));
        }
    }
}

}  // namespace crsys::expr
