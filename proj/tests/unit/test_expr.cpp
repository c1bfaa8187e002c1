#include <functional>
#include <random>

#include "crsys/core/error.hpp"
#include "crsys/expr/eval.hpp"
#include "crsys/expr/parser.hpp"
#include "crsys/expr/print.hpp"
#include "crsys/expr/wirtinger.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crsys;
using namespace crsys::expr;
using testing::cplx;

namespace {

cplx eval_at(const std::string& src, cplx z, std::initializer_list<std::pair<DVar, cplx>> vars = {}) {
    Env env(2, 2);
    env.z = z;
    for (auto [v, x] : vars) env.set(v, x);
    return eval(parse(src), env);
}

std::size_t parse_error_offset(const std::string& src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

const DVar u0{0, 0, 0};
const DVar du0{0, 1, 0};
const DVar u1{1, 0, 0};

// Random smooth expression over z, u0, d(0,1,0) and u1; no poles or branch cuts.
Expr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 11);
    std::normal_distribution<double> g(0.0, 1.0);
    switch (pick(rng)) {
        case 0: return var_z();
        case 1: return var_d(u0);
        case 2: return var_d(du0);
        case 3: return constant({g(rng), g(rng)});
        case 4: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 5: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        case 6:
        case 7: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        case 8: return unary(Op::Conj, random_expr(rng, depth - 1));
        case 9: return unary(std::uniform_int_distribution<int>(0, 1)(rng) ? Op::Re : Op::Im, random_expr(rng, depth - 1));
        case 10: return unary(Op::Exp, constant(0.3) * random_expr(rng, depth - 1));
        default:
            return power(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(2, 3)(rng)) +
                   var_d(u1) / (constant(3.0) + unary(Op::Exp, unary(Op::Re, var_z())));
    }
}

// Central-difference Wirtinger derivative in the slot `v` (or z when v is empty).
cplx fd_wirtinger(const Expr& e, Env env, const std::optional<DVar>& v, bool conjugate) {
    const double h = 1e-5;
    auto at = [&](cplx shift) {
        Env s = env;
        if (v) {
            s.set(*v, env.get(*v) + shift);
        } else {
            s.z += shift;
        }
        return eval(e, s);
    };
    const cplx dx = (at(h) - at(-h)) / (2 * h);
    const cplx dy = (at({0, h}) - at({0, -h})) / (2 * h);
    const cplx i{0.0, 1.0};
    return conjugate ? 0.5 * (dx + i * dy) : 0.5 * (dx - i * dy);
}

}  // namespace

TEST_CASE("parse examples") {
    const Expr e = parse("u0^2");
    CHECK(e->op == Op::Pow);
    CHECK(e->exponent == 2);
    REQUIRE(e->args.size() == 1);
    CHECK(e->args[0]->op == Op::D);
    CHECK(e->args[0]->var == u0);

    Definitions defs;
    defs["f"] = parse("1");
    const Expr m = parse("(1/(1+re(z)))*f - ((1-re(z))/(1+re(z)))*d(0,1,0)", defs);
    CHECK(free_vars(m) == std::set<DVar>{du0});

    CHECK(parse_error_offset("exp(") == 4);
}

TEST_CASE("parse errors carry offsets") {
    CHECK(parse_error_offset("1 + foo") == 4);
    CHECK(parse_error_offset("1 + exp(z, z)") == 4);
    CHECK(parse_error_offset("(z") == 2);
    CHECK(parse_error_offset("z +* 2") == 3);
    CHECK(parse_error_offset("z^1.5") != std::string::npos);
    CHECK(parse_error_offset("d(0,1)") != std::string::npos);
    CHECK(parse_error_offset("") == 0);
    try {
        parse("1 + foo");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
}

TEST_CASE("grammar precedence") {
    CHECK(eval_at("-2^2", 0.0) == cplx{-4.0});
    CHECK(eval_at("2*3+4", 0.0) == cplx{10.0});
    CHECK(eval_at("2*(3+4)", 0.0) == cplx{14.0});
    CHECK(eval_at("8/2/2", 0.0) == cplx{2.0});
    CHECK(eval_at("z^-1", 2.0) == cplx{0.5});
    CHECK(eval_at("1.5e1 + 2*i", 0.0) == cplx{15.0, 2.0});
    CHECK(parse_error_offset("2i") == 1);
    CHECK(eval_at("3*i", 0.0) == cplx{0.0, 3.0});
}

TEST_CASE("eval examples") {
    CHECK(std::abs(eval_at("z*conj(z)", {1.0, 1.0}) - 2.0) < 1e-15);
    CHECK(std::abs(eval_at("u0^2", 0.0, {{u0, {0.0, 3.0}}}) + 9.0) < 1e-15);
    CHECK(std::abs(eval_at("exp(log(z))", {2.0, 1.0}) - cplx{2.0, 1.0}) < 1e-14);
    CHECK(eval_at("re(z) + im(z)", {2.0, 5.0}) == cplx{7.0});
    CHECK(eval_at("u1 + d(0,1,0)", 0.0, {{u1, 2.0}, {du0, 3.0}}) == cplx{5.0});
}

TEST_CASE("eval domain errors") {
    CHECK_THROWS_AS(eval_at("1/(z-1)", 1.0), EvalError);
    CHECK_THROWS_AS(eval_at("log(z)", 0.0), EvalError);
    CHECK_THROWS_AS(eval_at("z^-2", 0.0), EvalError);
    try {
        eval_at("1 + log(z)", 0.0);
    } catch (const EvalError& e) {
        CHECK(e.offset() == 4);
    }
    Env small(1, 0);
    CHECK_THROWS_AS(eval(parse("d(0,1,0)"), small), EvalError);
}

TEST_CASE("constant folding never raises") {
    CHECK_NOTHROW(parse("1/0 + z"));
    CHECK_THROWS_AS(eval_at("1/0 + z", 0.0), EvalError);
    CHECK(is_constant(parse("2*3 + exp(0)")));
    CHECK(is_zero(parse("0*z")));
}

TEST_CASE("check_vars enforces component and order limits") {
    CHECK_NOTHROW(check_vars(parse("u0 + d(0,1,0)"), 1, 1));
    CHECK_THROWS_AS(check_vars(parse("u1"), 1, 1), InvalidArgument);
    CHECK_THROWS_AS(check_vars(parse("d(0,1,1)"), 1, 1), InvalidArgument);
}

TEST_CASE("print round trip is bitwise on evaluation") {
    std::mt19937_64 rng(17);
    Env env(2, 1);
    env.z = {0.31, -0.22};
    env.set(u0, {0.4, 0.1});
    env.set(du0, {-0.2, 0.5});
    env.set(u1, {0.7, -0.3});
    for (int k = 0; k < 200; ++k) {
        const Expr e = random_expr(rng, 4);
        const std::string text = print(e);
        const Expr back = parse(text);
        CHECK(print(back) == text);
        const cplx a = eval(e, env);
        const cplx b = eval(back, env);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("wirtinger examples") {
    const WirtingerVar eta = WirtingerVar::of(u0);
    Env env(1, 1);
    env.set(u0, {0.3, 0.4});
    const cplx d = eval(wirtinger_derive(parse("u0^2"), eta, false), env);
    CHECK(std::abs(d - 2.0 * cplx{0.3, 0.4}) < 1e-15);
    CHECK(eval(wirtinger_derive(parse("conj(u0)"), eta, true), env) == cplx{1.0});
    CHECK(eval(wirtinger_derive(parse("conj(u0)"), eta, false), env) == cplx{0.0});

    const Expr mizohata = parse("1/(1+re(z)) - ((1-re(z))/(1+re(z)))*d(0,1,0)");
    const WirtingerVar d10 = WirtingerVar::of(du0);
    Env at0(1, 1);
    CHECK(std::abs(eval(wirtinger_derive(mizohata, d10, false), at0) + 1.0) < 1e-15);
    CHECK(std::abs(eval(wirtinger_derive(mizohata, d10, true), at0)) < 1e-15);
}

TEST_CASE("wirtinger derivatives match central differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int checked = 0;
    for (int k = 0; k < 150; ++k) {
        const Expr e = random_expr(rng, 4);
        Env env(2, 1);
        env.z = {u(rng), u(rng)};
        env.set(u0, {u(rng), u(rng)});
        env.set(du0, {u(rng), u(rng)});
        env.set(u1, {u(rng), u(rng)});
        const cplx scale = 1.0 + std::abs(eval(e, env));
        for (bool conjugate : {false, true}) {
            for (const std::optional<DVar>& v : {std::optional<DVar>{}, std::optional<DVar>{u0},
                                                 std::optional<DVar>{du0}, std::optional<DVar>{u1}}) {
                const WirtingerVar w = v ? WirtingerVar::of(*v) : WirtingerVar::z_var();
                const cplx sym = eval(wirtinger_derive(e, w, conjugate), env);
                const cplx fd = fd_wirtinger(e, env, v, conjugate);
                CHECK(std::abs(sym - fd) <= 1e-6 * std::abs(scale));
                ++checked;
            }
        }
    }
    CHECK(checked == 1200);
}

TEST_CASE("wirtinger derivatives of log and division") {
    Env env(1, 0);
    env.set(u0, {0.5, 0.7});
    const WirtingerVar eta = WirtingerVar::of(u0);
    for (const char* src : {"log(u0)", "1/u0", "u0/(2+conj(u0))", "log(u0*conj(u0))"}) {
        const Expr e = parse(src);
        for (bool conjugate : {false, true}) {
            const cplx sym = eval(wirtinger_derive(e, eta, conjugate), env);
            CHECK(std::abs(sym - fd_wirtinger(e, env, u0, conjugate)) < 1e-6);
        }
    }
}

TEST_CASE("sample_jet uses exact symbolic derivatives") {
    const auto g = core::build_grid(0.5, 6, 12);
    const auto jet = sample_jet(parse("exp(z)*conj(z)^2"), g, 2);
    for (std::size_t n = 0; n < g->size(); ++n) {
        const cplx w = g->node(n);
        CHECK(std::abs(jet.at(1, 0)(n) - std::exp(w) * std::conj(w) * std::conj(w)) < 1e-14);
        CHECK(std::abs(jet.at(1, 1)(n) - 2.0 * std::exp(w) * std::conj(w)) < 1e-14);
        CHECK(std::abs(jet.at(0, 2)(n) - 2.0 * std::exp(w)) < 1e-14);
    }
}

TEST_CASE("definitions are inlined and unknown names rejected") {
    Definitions defs;
    defs["F"] = parse("2*z");
    defs["G"] = parse("F + 1", defs);
    CHECK_THROWS_AS(parse("G"), ParseError);
    Env env(1, 0);
    env.z = 3.0;
    CHECK(eval(parse("F", defs), env) == cplx{6.0});
    env.z = 1.0;
    CHECK(eval(parse("G*G", defs), env) == cplx{9.0});
}

TEST_CASE("substitute replaces derivative slots") {
    const Expr e = parse("u0^2 + d(0,1,0)");
    const Expr s = substitute(e, [](const DVar& v) -> std::optional<Expr> {
        if (v == u0) return parse("u0 + 1");
        return std::nullopt;
    });
    Env env(1, 1);
    env.set(u0, 2.0);
    env.set(du0, 5.0);
    CHECK(eval(s, env) == cplx{14.0});
    CHECK(references_z(parse("conj(z)")));
    CHECK_FALSE(references_z(parse("u0")));
}
