#include "crsys/ops/monomial.hpp"

#include "crsys/core/cmath.hpp"

namespace crsys::ops::exact {

using core::Polynomial;

Polynomial T(const Polynomial& p, double R) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        const auto [a, b] = e;
        out.add_term(a, b + 1, c / static_cast<double>(b + 1));
        if (a >= b + 1) out.add_term(a - b - 1, 0, -c * core::ipow(R, 2 * (b + 1)) / static_cast<double>(b + 1));
    }
    return out;
}

Polynomial Tbar(const Polynomial& p, double R) { return T(p.conj(), R).conj(); }

Polynomial S(const Polynomial& p, double R) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        const auto [a, b] = e;
        if (a >= b) out.add_term(a - b, 0, c * core::ipow(R, 2 * b));
    }
    return out;
}

Polynomial Sbar(const Polynomial& p, double R) { return S(p.conj(), R).conj(); }

Polynomial Sb(const Polynomial& p, double R) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        const auto [a, b] = e;
        if (a - b >= 2) out.add_term(a - b - 2, 0, -c * core::ipow(R, 2 * b + 2));
    }
    return out;
}

Polynomial T2(const Polynomial& p, double R) { return T(p, R).derivative(1, 0); }

Polynomial Tk(const Polynomial& p, int k, double R) { return T(p, R).derivative(k + 1, 0); }

Polynomial compose_T(const Polynomial& p, int mu, int nu, double R) {
    Polynomial out = p;
    for (int s = 0; s < mu; ++s) out = Tbar(out, R);
    for (int s = 0; s < nu; ++s) out = T(out, R);
    return out;
}

}  // namespace crsys::ops::exact
