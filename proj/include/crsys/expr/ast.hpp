#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "crsys/core/error.hpp"

namespace crsys::expr {

using cplx = std::complex<double>;

enum class Op { Const, Z, D, Neg, Add, Sub, Mul, Div, Pow, Conj, Re, Im, Exp, Log };

struct Node;
using Expr = std::shared_ptr<const Node>;

/// Identifies the solution derivative d^i dbar^k u_j, written d(j,i,k).
struct DVar {
    int comp = 0;
    int di = 0;
    int dbar = 0;
    int order() const { return di + dbar; }
    auto operator<=>(const DVar&) const = default;
};

/// Immutable expression node. `offset` is the source position used in
/// diagnostics (0 for synthesized nodes).
struct Node {
    Op op = Op::Const;
    cplx value{};
    DVar var{};
    int exponent = 0;
    std::vector<Expr> args;
    std::size_t offset = 0;
};

/// Position-annotated syntax or arity error.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }
    /// The message without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

/// Domain error raised during evaluation (log 0, division by 0, unbound variable).
class EvalError : public Error {
public:
    EvalError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }
    /// The message without the position prefix.
    const std::string& message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

// Node factories. Constant operands are folded when folding cannot raise a
// domain error; trivial identities (x+0, x*1, x*0, x^1, x^0) are applied.
Expr constant(cplx c, std::size_t offset = 0);
Expr var_z(std::size_t offset = 0);
Expr var_d(DVar v, std::size_t offset = 0);
Expr unary(Op op, Expr a, std::size_t offset = 0);
Expr binary(Op op, Expr a, Expr b, std::size_t offset = 0);
Expr power(Expr a, int exponent, std::size_t offset = 0);

inline Expr operator+(Expr a, Expr b) { return binary(Op::Add, std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return binary(Op::Sub, std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return binary(Op::Div, std::move(a), std::move(b)); }

bool is_constant(const Expr& e);
bool is_zero(const Expr& e);

/// All d(j,i,k) variables referenced by e.
std::set<DVar> free_vars(const Expr& e);
bool references_z(const Expr& e);

/// Rebuilds e with every D leaf replaced by replace(var) when it returns a value.
Expr substitute(const Expr& e, const std::function<std::optional<Expr>(const DVar&)>& replace);

/// Throws InvalidArgument unless every D leaf has comp < n and order <= max_order.
void check_vars(const Expr& e, int n, int max_order);

}  // namespace crsys::expr
