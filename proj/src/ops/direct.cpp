#include "crsys/ops/direct.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "crsys/core/cmath.hpp"
#include "crsys/core/grid.hpp"

namespace crsys::ops::direct {

namespace {

constexpr double pi = std::numbers::pi;

// -(c/pi) int_0^{2pi} e^{-i p phi} int_0^{L(phi)} h(phi, s) ds dphi,
// trapezoid in phi and Gauss-Legendre in s.
template <typename H>
cplx polar_integral(cplx z, double R, int p, double c, Rule rule, const H& h) {
    std::vector<double> x, w;
    core::gauss_legendre(rule.n_s, 0.0, 1.0, x, w);
    cplx total{};
    for (int k = 0; k < rule.n_phi; ++k) {
        const double phi = 2.0 * pi * k / rule.n_phi;
        const double L = ray_length(z, phi, R);
        cplx inner{};
        for (int q = 0; q < rule.n_s; ++q) inner += w[q] * L * h(std::polar(1.0, phi), x[q] * L);
        total += std::polar(1.0, -p * phi) * inner;
    }
    return -c / pi * total * (2.0 * pi / rule.n_phi);
}

}  // namespace

double ray_length(cplx z, double phi, double R) {
    const double proj = std::real(std::conj(z) * std::polar(1.0, phi));
    return -proj + std::sqrt(R * R - std::norm(z) + proj * proj);
}

cplx T(const Function& f, cplx z, double R, Rule rule) {
    return polar_integral(z, R, 1, 1.0, rule, [&](cplx e, double s) { return f(z + s * e); });
}

cplx T2(const Function& f, cplx z, double R, Rule rule) {
    const cplx fz = f(z);
    return polar_integral(z, R, 2, 1.0, rule, [&](cplx e, double s) { return (f(z + s * e) - fz) / s; });
}

cplx Tk(const JetFunction& f, int k, cplx z, double R, Rule rule) {
    std::vector<cplx> coef;
    std::vector<std::pair<int, int>> idx;
    for (int p = 0; p <= k; ++p) {
        for (int j = 0; j <= p; ++j) {
            coef.push_back(f(p - j, j, z) / (core::factorial(p - j) * core::factorial(j)));
            idx.emplace_back(p - j, j);
        }
    }
    return polar_integral(z, R, k + 2, core::factorial(k + 1), rule, [&](cplx e, double s) {
        const cplx d = s * e;
        cplx taylor{};
        for (std::size_t t = 0; t < coef.size(); ++t) {
            taylor += coef[t] * core::ipow(d, idx[t].first) * core::ipow(std::conj(d), idx[t].second);
        }
        return (f(0, 0, z + d) - taylor) / core::ipow(s, k + 1);
    });
}

cplx annulus_moment(int m, int n, cplx s, cplx c, double rho, double R, int n_phi) {
    // In polar coordinates about s the integrand is t^{n-m} e^{-i(n+m)phi},
    // dzetabar ^ dzeta = 2i t dt dphi, so the radial integral is closed form.
    const int power = n - m + 2;
    auto F = [power](double t) { return power == 0 ? std::log(t) : std::pow(t, power) / power; };
    cplx total{};
    for (int k = 0; k < n_phi; ++k) {
        const double phi = 2.0 * pi * k / n_phi;
        const double t_outer = ray_length(s, phi, R);
        const double t_inner = ray_length(s - c, phi, rho);
        total += std::polar(1.0, -(n + m) * phi) * (F(t_outer) - F(t_inner));
    }
    return cplx{0.0, 2.0} * total * (2.0 * pi / n_phi);
}

}  // namespace crsys::ops::direct
