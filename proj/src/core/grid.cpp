#include "crsys/core/grid.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <string>

#include "crsys/core/error.hpp"

namespace crsys::core {

namespace {

struct GlTableDeleter {
    void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

// Pairwise summation keeps the reduction order fixed and the rounding error O(log N).
cplx pairwise_sum(std::span<const cplx> v) {
    if (v.size() <= 16) {
        cplx s{};
        for (const auto& x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
    std::unique_ptr<gsl_integration_glfixed_table, GlTableDeleter> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)));
    if (!table) throw Error("gauss_legendre: table allocation failed");
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &x[i], &w[i], table.get());
    }
}

DiskGrid::DiskGrid(double radius, int n_r, int n_theta)
    : radius_(radius), n_r_(n_r), n_theta_(n_theta) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidArgument("build_grid: radius must be positive, got " + std::to_string(radius));
    }
    if (n_r < 4) throw InvalidArgument("build_grid: n_r must be >= 4, got " + std::to_string(n_r));
    if (n_theta < 8 || n_theta % 2 != 0) {
        throw InvalidArgument("build_grid: n_theta must be even and >= 8, got " +
                              std::to_string(n_theta));
    }

    std::vector<double> gx, gw;
    gauss_legendre(n_r, 0.0, radius, gx, gw);

    ring_radii_ = gx;
    ring_radii_.push_back(radius);

    thetas_.resize(n_theta);
    const double dtheta = 2.0 * std::numbers::pi / n_theta;
    for (int k = 0; k < n_theta; ++k) thetas_[k] = dtheta * k;

    const std::size_t total = 1 + static_cast<std::size_t>(n_r + 1) * n_theta;
    nodes_.assign(total, cplx{});
    weights_.assign(total, 0.0);
    for (int ring = 0; ring <= n_r; ++ring) {
        const double rho = ring_radii_[ring];
        const double w = ring < n_r ? gw[ring] * rho * dtheta : 0.0;
        for (int k = 0; k < n_theta; ++k) {
            const std::size_t idx = node_index(ring, k);
            nodes_[idx] = std::polar(rho, thetas_[k]);
            weights_[idx] = w;
        }
    }
}

cplx DiskGrid::integrate(std::span<const cplx> values) const {
    if (values.size() != nodes_.size()) throw InvalidArgument("integrate: size mismatch");
    std::vector<cplx> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = values[i] * weights_[i];
    return pairwise_sum(terms);
}

GridPtr build_grid(double radius, int n_r, int n_theta) {
    return std::make_shared<const DiskGrid>(radius, n_r, n_theta);
}

}  // namespace crsys::core
