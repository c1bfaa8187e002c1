#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "crsys/core/polynomial.hpp"

namespace testing {

using crsys::core::cplx;
using crsys::core::Field;
using crsys::core::Polynomial;

inline double max_error(const Field& f, const Polynomial& p, int c = 0) {
    double e = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) e = std::max(e, std::abs(f(i, c) - p(f.grid().node(i))));
    return e;
}

inline double max_error(const Field& a, const Field& b) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) e = std::max(e, std::abs(a.values()[k] - b.values()[k]));
    return e;
}

// Dense polynomial with standard normal coefficients, total degree <= degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> g(0.0, 1.0);
    Polynomial p;
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; a + b <= degree; ++b) p.add_term(a, b, {g(rng), g(rng)});
    }
    return p;
}

inline Polynomial z() { return Polynomial::monomial(1, 0); }
inline Polynomial zb() { return Polynomial::monomial(0, 1); }

}  // namespace testing
