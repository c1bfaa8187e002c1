#include "crsys/expr/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace crsys::expr {

namespace {

class Parser {
public:
    Parser(std::string_view src, const Definitions& defs) : src_(src), defs_(defs) {}

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+')) {
                lhs = binary(Op::Add, lhs, term(), at);
            } else if (accept('-')) {
                lhs = binary(Op::Sub, lhs, term(), at);
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary_expr();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*')) {
                lhs = binary(Op::Mul, lhs, unary_expr(), at);
            } else if (accept('/')) {
                lhs = binary(Op::Div, lhs, unary_expr(), at);
            } else {
                return lhs;
            }
        }
    }

    Expr unary_expr() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept('-')) return unary(Op::Neg, unary_expr(), at);
        return power_expr();
    }

    Expr power_expr() {
        Expr base = primary();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_ws();
        const bool negative = accept('-');
        skip_ws();
        const long n = integer("integer exponent");
        return power(base, static_cast<int>(negative ? -n : n), at);
    }

    long integer(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        long v = 0;
        const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc{} || v > std::numeric_limits<int>::max()) fail_at(std::string(what) + " out of range", start);
        return v;
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        double v = 0.0;
        const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc{} || res.ptr != src_.data() + pos_) fail_at("malformed number", start);
        return constant(v, start);
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    // Parses "(arg, arg, ...)" after a function name and checks the count.
    std::vector<Expr> call_args(const std::string& name, std::size_t at, std::size_t arity) {
        expect('(');
        std::vector<Expr> args;
        skip_ws();
        if (!accept(')')) {
            do {
                args.push_back(expr());
            } while (accept(','));
            expect(')');
        }
        if (args.size() != arity) {
            fail_at(name + " expects " + std::to_string(arity) + " argument(s), got " + std::to_string(args.size()), at);
        }
        return args;
    }

    Expr primary() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (accept('(')) {
            Expr e = expr();
            expect(')');
            return e;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail(std::string("unexpected '") + c + "'");

        const std::string id = identifier();
        if (id == "i") return constant({0.0, 1.0}, at);
        if (id == "z") return var_z(at);
        if (id == "d") {
            expect('(');
            const long j = integer("component index");
            expect(',');
            const long di = integer("derivative order");
            expect(',');
            const long dbar = integer("derivative order");
            skip_ws();
            if (accept(',')) fail_at("d expects 3 argument(s)", at);
            expect(')');
            return var_d({static_cast<int>(j), static_cast<int>(di), static_cast<int>(dbar)}, at);
        }
        if (id.size() > 1 && id[0] == 'u' &&
            id.find_first_not_of("0123456789", 1) == std::string::npos) {
            int j = 0;
            std::from_chars(id.data() + 1, id.data() + id.size(), j);
            return var_d({j, 0, 0}, at);
        }
        static const std::pair<const char*, Op> funcs[] = {
            {"conj", Op::Conj}, {"re", Op::Re}, {"im", Op::Im}, {"exp", Op::Exp}, {"log", Op::Log}};
        for (const auto& [name, op] : funcs) {
            if (id == name) return unary(op, call_args(id, at, 1)[0], at);
        }
        if (auto it = defs_.find(id); it != defs_.end()) return it->second;
        fail_at("unknown identifier '" + id + "'", at);
    }

    std::string_view src_;
    const Definitions& defs_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source, const Definitions& defs) { return Parser(source, defs).run(); }

}  // namespace crsys::expr
