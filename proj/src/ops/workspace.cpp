#include "crsys/ops/workspace.hpp"

#include <cmath>
#include <numbers>

#include "crsys/core/cmath.hpp"
#include "crsys/core/parallel.hpp"

namespace crsys::ops {

namespace {

// Barycentric Lagrange interpolation on a fixed node set.
class Interpolant {
public:
    explicit Interpolant(std::vector<double> nodes) : x_(std::move(nodes)), w_(x_.size(), 1.0) {
        for (std::size_t j = 0; j < x_.size(); ++j) {
            for (std::size_t k = 0; k < x_.size(); ++k) {
                if (k != j) w_[j] /= (x_[j] - x_[k]);
            }
        }
        double scale = 0.0;
        for (double w : w_) scale = std::max(scale, std::abs(w));
        for (double& w : w_) w /= scale;
    }

    std::size_t size() const { return x_.size(); }

    // Adds weight * L_j(x) to row[j] for every basis polynomial L_j.
    void accumulate(double x, double weight, std::vector<double>& row) const {
        for (std::size_t j = 0; j < x_.size(); ++j) {
            if (x == x_[j]) {
                row[j] += weight;
                return;
            }
        }
        double denom = 0.0;
        for (std::size_t j = 0; j < x_.size(); ++j) denom += w_[j] / (x - x_[j]);
        for (std::size_t j = 0; j < x_.size(); ++j) row[j] += weight * (w_[j] / (x - x_[j])) / denom;
    }

private:
    std::vector<double> x_;
    std::vector<double> w_;
};

struct QuadPoint {
    double x;       // radius rho
    double w;       // quadrature weight in rho (outer) or s (inner)
    double s;       // rho / r, or the inner variable s = rho / r
};

// Points for int_r^R g(rho) K(r/rho) drho on geometric panels [r,2r],[2r,4r],...
// A single panel [0, R] when r = 0.
std::vector<QuadPoint> outer_points(double r, double R, int q) {
    std::vector<QuadPoint> pts;
    std::vector<double> x, w;
    auto add_panel = [&](double a, double b) {
        core::gauss_legendre(q, a, b, x, w);
        for (int i = 0; i < q; ++i) pts.push_back({x[i], w[i], r > 0 ? x[i] / r : 0.0});
    };
    if (r == 0.0) {
        add_panel(0.0, R);
        return pts;
    }
    double a = r;
    while (a < R * (1.0 - 1e-14)) {
        const double b = std::min(2.0 * a, R);
        add_panel(a, b);
        a = b;
    }
    return pts;
}

}  // namespace

OperatorWorkspace::OperatorWorkspace(core::GridPtr grid)
    : grid_(std::move(grid)), band_(grid_->n_theta() / 2 - 1) {
    const int nt = grid_->n_theta();
    const int nr = grid_->n_r();
    const double R = grid_->radius();

    boundary_weights_.assign(nt, 2.0 * std::numbers::pi * R / nt);
    roots_.resize(nt);
    for (int k = 0; k < nt; ++k) roots_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / nt);

    std::vector<double> src{0.0};
    for (double r : grid_->ring_radii()) src.push_back(r);
    const Interpolant interp(src);
    const std::size_t ns = src.size();
    const auto radii = grid_->ring_radii();
    const std::size_t n_targets = radii.size();

    // Outer rule (modes n >= 1): per target, points and their interpolation rows.
    const int q_outer = nr / 2 + 8;
    // Inner rule (modes n <= 0): int_0^1 g(r s) s^{1-n} ds, polynomial in s.
    const int q_inner = (nr + band_) / 2 + 8;
    std::vector<double> s_nodes, s_weights;
    core::gauss_legendre(q_inner, 0.0, 1.0, s_nodes, s_weights);

    struct TargetRule {
        std::vector<QuadPoint> outer;
        std::vector<std::vector<double>> outer_rows;
        std::vector<std::vector<double>> inner_rows;
        std::vector<double> value_row;  // interpolation row at r itself
    };
    std::vector<TargetRule> rules(n_targets + 1);  // last entry: the center
    core::parallel_for(n_targets + 1, [&](std::size_t t) {
        const double r = t < n_targets ? radii[t] : 0.0;
        TargetRule& tr = rules[t];
        tr.outer = outer_points(r, R, q_outer);
        for (const auto& p : tr.outer) {
            std::vector<double> row(ns, 0.0);
            interp.accumulate(p.x, 1.0, row);
            tr.outer_rows.push_back(std::move(row));
        }
        for (double s : s_nodes) {
            std::vector<double> row(ns, 0.0);
            interp.accumulate(r * s, 1.0, row);
            tr.inner_rows.push_back(std::move(row));
        }
        tr.value_row.assign(ns, 0.0);
        interp.accumulate(r, 1.0, tr.value_row);
    });

    const int n_modes = 2 * band_ + 1;
    t_rows_.assign(n_modes, std::vector<std::vector<double>>(n_targets, std::vector<double>(ns, 0.0)));
    t2_rows_ = t_rows_;
    core::parallel_for(static_cast<std::size_t>(n_modes), [&](std::size_t idx) {
        const int n = static_cast<int>(idx) - band_;
        for (std::size_t t = 0; t < n_targets; ++t) {
            const double r = radii[t];
            const TargetRule& tr = rules[t];
            auto& row_t = t_rows_[idx][t];
            auto& row_t2 = t2_rows_[idx][t];
            if (n >= 1) {
                // T:  -2 int_r^R g (r/rho)^{n-1} drho
                // 2T: -2 (n-1) int_r^R g (r/rho)^{n-2} drho / rho + g(r)
                for (std::size_t q = 0; q < tr.outer.size(); ++q) {
                    const auto& p = tr.outer[q];
                    const double ratio = 1.0 / p.s;
                    const double kt = -2.0 * p.w * core::ipow(ratio, n - 1);
                    const double kt2 = -2.0 * (n - 1) * p.w * core::ipow(ratio, n - 2) / p.x;
                    for (std::size_t j = 0; j < ns; ++j) {
                        row_t[j] += kt * tr.outer_rows[q][j];
                        if (n >= 2) row_t2[j] += kt2 * tr.outer_rows[q][j];
                    }
                }
            } else {
                // T:  2 r int_0^1 g(r s) s^{1-n} ds
                // 2T: -2 (1-n) int_0^1 g(r s) s^{1-n} ds + g(r)
                for (std::size_t q = 0; q < s_nodes.size(); ++q) {
                    const double ws = s_weights[q] * core::ipow(s_nodes[q], 1 - n);
                    for (std::size_t j = 0; j < ns; ++j) {
                        row_t[j] += 2.0 * r * ws * tr.inner_rows[q][j];
                        row_t2[j] += -2.0 * (1 - n) * ws * tr.inner_rows[q][j];
                    }
                }
            }
            for (std::size_t j = 0; j < ns; ++j) row_t2[j] += tr.value_row[j];
        }
    });

    // Center: T picks up mode 1 via -2 int_0^R g_1, 2T picks up mode 2 via -2 int_0^R g_2 / rho.
    const TargetRule& c = rules[n_targets];
    t_center_.assign(ns, 0.0);
    t2_center_.assign(ns, 0.0);
    for (std::size_t q = 0; q < c.outer.size(); ++q) {
        const auto& p = c.outer[q];
        for (std::size_t j = 0; j < ns; ++j) {
            t_center_[j] += -2.0 * p.w * c.outer_rows[q][j];
            t2_center_[j] += -2.0 * p.w / p.x * c.outer_rows[q][j];
        }
    }
}

cplx OperatorWorkspace::twiddle(int m, int k) const {
    const int nt = static_cast<int>(roots_.size());
    long idx = (static_cast<long>(m) * k) % nt;
    if (idx < 0) idx += nt;
    return roots_[idx];
}

std::vector<std::vector<cplx>> OperatorWorkspace::analyze(std::span<const cplx> values) const {
    const int nt = grid_->n_theta();
    const int rings = grid_->n_rings();
    std::vector<std::vector<cplx>> coeffs(rings, std::vector<cplx>(2 * band_ + 1));
    for (int t = 0; t < rings; ++t) {
        for (int n = -band_; n <= band_; ++n) {
            cplx sum{};
            for (int k = 0; k < nt; ++k) sum += values[grid_->node_index(t, k)] * twiddle(-n, k);
            coeffs[t][n + band_] = sum / static_cast<double>(nt);
        }
    }
    return coeffs;
}

std::vector<cplx> OperatorWorkspace::profile(const std::vector<std::vector<cplx>>& coeffs, cplx center_value,
                                             int n) const {
    std::vector<cplx> g;
    g.reserve(coeffs.size() + 1);
    g.push_back(n == 0 ? center_value : cplx{});
    for (const auto& ring : coeffs) g.push_back(ring[n + band_]);
    return g;
}

}  // namespace crsys::ops
