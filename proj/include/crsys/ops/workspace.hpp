#pragma once

#include <vector>

#include "crsys/core/field.hpp"

namespace crsys::ops {

using core::cplx;

/// Precomputed data for applying the area and boundary operators on one grid.
///
/// Fields are split into angular Fourier modes ring by ring. On mode n the
/// operator T acts as a one-dimensional radial integral that lands on mode
/// n - 1 (and d T, i.e. the operator 2T, lands on n - 2). Those radial
/// integrals are tabulated once per (mode, target radius) as rows acting on
/// the profile samples {f_n(0), f_n(r_1), ..., f_n(r_nr), f_n(R)}.
class OperatorWorkspace {
public:
    explicit OperatorWorkspace(core::GridPtr grid);

    const core::DiskGrid& grid() const { return *grid_; }
    const core::GridPtr& grid_ptr() const { return grid_; }

    /// Highest retained angular mode |n| (Nyquist is dropped).
    int band() const { return band_; }
    /// Trapezoid weights 2 pi R / n_theta of the boundary nodes.
    const std::vector<double>& boundary_weights() const { return boundary_weights_; }

    /// Coefficients c[ring][n + band] of every ring, boundary ring last.
    std::vector<std::vector<cplx>> analyze(std::span<const cplx> values) const;
    /// Radial profile samples of mode n, ordered as the table columns.
    std::vector<cplx> profile(const std::vector<std::vector<cplx>>& coeffs, cplx center_value, int n) const;

    /// e^{i m theta_k} for any integer m.
    cplx twiddle(int m, int k) const;

    /// Rows for T (output mode n - 1) and for 2T (output mode n - 2);
    /// row t targets ring_radii()[t].
    const std::vector<std::vector<double>>& t_rows(int n) const { return t_rows_[n + band_]; }
    const std::vector<std::vector<double>>& t2_rows(int n) const { return t2_rows_[n + band_]; }
    /// Center-node rows: mode 1 under T and mode 2 under 2T are the only
    /// contributions to the value at z = 0.
    const std::vector<double>& t_center_row() const { return t_center_; }
    const std::vector<double>& t2_center_row() const { return t2_center_; }

private:
    core::GridPtr grid_;
    int band_;
    std::vector<double> boundary_weights_;
    std::vector<cplx> roots_;
    std::vector<std::vector<std::vector<double>>> t_rows_;
    std::vector<std::vector<std::vector<double>>> t2_rows_;
    std::vector<double> t_center_;
    std::vector<double> t2_center_;
};

}  // namespace crsys::ops
