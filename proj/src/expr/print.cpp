#include "crsys/expr/print.hpp"

#include <array>
#include <charconv>

namespace crsys::expr {

std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

namespace {

std::string literal(cplx c) {
    const double re = c.real();
    const double im = c.imag();
    if (im == 0.0) return re < 0 || std::signbit(re) ? "(" + format_double(re) + ")" : format_double(re);
    std::string s = "(" + format_double(re);
    s += std::signbit(im) ? "-" : "+";
    s += format_double(std::abs(im)) + "*i)";
    return s;
}

const char* func_name(Op op) {
    switch (op) {
        case Op::Conj: return "conj";
        case Op::Re: return "re";
        case Op::Im: return "im";
        case Op::Exp: return "exp";
        case Op::Log: return "log";
        default: return "";
    }
}

}  // namespace

std::string print(const Expr& e) {
    const Node& n = *e;
    switch (n.op) {
        case Op::Const:
            return literal(n.value);
        case Op::Z:
            return "z";
        case Op::D:
            return "d(" + std::to_string(n.var.comp) + "," + std::to_string(n.var.di) + "," +
                   std::to_string(n.var.dbar) + ")";
        case Op::Neg:
            return "(-" + print(n.args[0]) + ")";
        case Op::Add:
            return "(" + print(n.args[0]) + "+" + print(n.args[1]) + ")";
        case Op::Sub:
            return "(" + print(n.args[0]) + "-" + print(n.args[1]) + ")";
        case Op::Mul:
            return "(" + print(n.args[0]) + "*" + print(n.args[1]) + ")";
        case Op::Div:
            return "(" + print(n.args[0]) + "/" + print(n.args[1]) + ")";
        case Op::Pow:
            return "(" + print(n.args[0]) + "^" + std::to_string(n.exponent) + ")";
        default:
            return std::string(func_name(n.op)) + "(" + print(n.args[0]) + ")";
    }
}

}  // namespace crsys::expr
