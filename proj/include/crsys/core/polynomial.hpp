#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crsys/core/jet.hpp"

namespace crsys::core {

/// Polynomial in (z, zbar): sum of c_{a,b} z^a zbar^b.
///
/// Used for homogeneous seeds, initial-value shifts and as exact test input;
/// Wirtinger derivatives act term-wise (d z^a zbar^b = a z^{a-1} zbar^b).
class Polynomial {
public:
    using Exponents = std::pair<int, int>;

    Polynomial() = default;
    static Polynomial monomial(int a, int b, cplx coef = 1.0);
    static Polynomial constant(cplx c) { return monomial(0, 0, c); }

    const std::map<Exponents, cplx>& terms() const { return terms_; }
    cplx coefficient(int a, int b) const;
    void add_term(int a, int b, cplx coef);

    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree a + b (-1 for the zero polynomial).
    int degree() const;
    bool is_homogeneous(int degree) const;

    cplx operator()(cplx z) const;
    /// d^i dbar^j of the polynomial.
    Polynomial derivative(int i, int j) const;
    Polynomial conj() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(cplx s);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }

    /// Sup of |coefficient differences|; 0 means identical polynomials.
    double distance(const Polynomial& o) const;

    std::string to_string() const;

private:
    void prune();
    std::map<Exponents, cplx> terms_;
};

/// Samples p at every node as a single-component field.
Field sample(const Polynomial& p, const GridPtr& grid);
/// Exact jet of order k of a vector polynomial map (one polynomial per component).
Jet polynomial_jet(std::span<const Polynomial> components, const GridPtr& grid, int order);
Jet polynomial_jet(const Polynomial& p, const GridPtr& grid, int order);

}  // namespace crsys::core
