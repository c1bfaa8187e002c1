#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace crsys::core {

using cplx = std::complex<double>;

/// Polar discretization of the closed disk |z| <= R.
///
/// Node layout:
///   - node 0 is the center z = 0 (zero weight, point evaluation only);
///   - rings 0..n_r-1 sit at the Gauss-Legendre radii of (0, R) and carry
///     the area quadrature weights;
///   - ring n_r is the boundary circle |z| = R (zero weight), so that
///     boundary integrals and sup norms see the true boundary values.
/// Every ring holds n_theta equispaced angles theta_k = 2 pi k / n_theta.
class DiskGrid {
public:
    DiskGrid(double radius, int n_r, int n_theta);

    double radius() const { return radius_; }
    int n_r() const { return n_r_; }
    int n_theta() const { return n_theta_; }

    /// Number of rings with nodes: n_r quadrature rings plus the boundary.
    int n_rings() const { return n_r_ + 1; }
    std::size_t size() const { return nodes_.size(); }

    static constexpr std::size_t center = 0;
    std::size_t node_index(int ring, int k) const {
        return 1 + static_cast<std::size_t>(ring) * n_theta_ + k;
    }
    std::size_t boundary_node(int k) const { return node_index(n_r_, k); }
    bool is_boundary(std::size_t node) const { return node >= node_index(n_r_, 0); }

    std::span<const cplx> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }
    /// Radii of the rings: n_r Gauss radii followed by R.
    std::span<const double> ring_radii() const { return ring_radii_; }
    std::span<const double> thetas() const { return thetas_; }

    cplx node(std::size_t i) const { return nodes_[i]; }
    double r(std::size_t i) const { return std::abs(nodes_[i]); }

    /// Quadrature of sampled values against area measure dA.
    cplx integrate(std::span<const cplx> values) const;

private:
    double radius_;
    int n_r_;
    int n_theta_;
    std::vector<double> ring_radii_;
    std::vector<double> thetas_;
    std::vector<cplx> nodes_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const DiskGrid>;

/// Builds a grid; rejects R <= 0, n_r < 4, n_theta < 8 or odd n_theta.
GridPtr build_grid(double radius, int n_r, int n_theta);

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

}  // namespace crsys::core
