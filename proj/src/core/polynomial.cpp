#include "crsys/core/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crsys/core/cmath.hpp"
#include "crsys/core/error.hpp"

namespace crsys::core {

Polynomial Polynomial::monomial(int a, int b, cplx coef) {
    Polynomial p;
    p.add_term(a, b, coef);
    return p;
}

cplx Polynomial::coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? cplx{} : it->second;
}

void Polynomial::add_term(int a, int b, cplx coef) {
    if (a < 0 || b < 0) throw InvalidArgument("Polynomial: negative exponent");
    if (coef == cplx{}) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == cplx{}) terms_.erase(it);
    }
}

void Polynomial::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == cplx{}; });
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

bool Polynomial::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const auto& kv) { return kv.first.first + kv.first.second == degree; });
}

cplx Polynomial::operator()(cplx z) const {
    cplx sum{};
    const cplx zb = std::conj(z);
    for (const auto& [e, c] : terms_) sum += c * ipow(z, e.first) * ipow(zb, e.second);
    return sum;
}

Polynomial Polynomial::derivative(int i, int j) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        const auto [a, b] = e;
        if (a < i || b < j) continue;
        const double scale = factorial(a) / factorial(a - i) * factorial(b) / factorial(b - j);
        out.add_term(a - i, b - j, c * scale);
    }
    return out;
}

Polynomial Polynomial::conj() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, std::conj(c));
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(cplx s) {
    for (auto& [e, c] : terms_) c *= s;
    prune();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    }
    return out;
}

double Polynomial::distance(const Polynomial& o) const {
    Polynomial diff = *this - o;
    double d = 0.0;
    for (const auto& [e, c] : diff.terms_) d = std::max(d, std::abs(c));
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        if (e.first) os << "*z^" << e.first;
        if (e.second) os << "*zbar^" << e.second;
    }
    return os.str();
}

Field sample(const Polynomial& p, const GridPtr& grid) {
    Field out(grid, 1);
    for (std::size_t i = 0; i < grid->size(); ++i) out(i) = p(grid->node(i));
    return out;
}

Jet polynomial_jet(std::span<const Polynomial> components, const GridPtr& grid, int order) {
    if (components.empty()) throw InvalidArgument("polynomial_jet: no components");
    Jet out(grid, static_cast<int>(components.size()), order);
    for (int p = 0; p <= order; ++p) {
        for (int j = 0; j <= p; ++j) {
            const int i = p - j;
            Field& f = out.at(i, j);
            for (std::size_t c = 0; c < components.size(); ++c) {
                const Polynomial d = components[c].derivative(i, j);
                for (std::size_t n = 0; n < grid->size(); ++n) f(n, static_cast<int>(c)) = d(grid->node(n));
            }
        }
    }
    return out;
}

Jet polynomial_jet(const Polynomial& p, const GridPtr& grid, int order) {
    return polynomial_jet(std::span<const Polynomial>(&p, 1), grid, order);
}

}  // namespace crsys::core
