#pragma once

#include <complex>
#include <span>
#include <vector>

#include "crsys/core/grid.hpp"

namespace crsys::core {

/// A sampled map D -> C^n: one complex value per (node, component).
///
/// Storage is component-major so that operators, which act on one
/// scalar component at a time, see contiguous spans.
class Field {
public:
    Field() = default;
    Field(GridPtr grid, int n_components);
    Field(GridPtr grid, int n_components, std::vector<cplx> values);

    const DiskGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    int n_components() const { return n_components_; }
    std::size_t size() const { return grid_ ? grid_->size() : 0; }

    std::span<cplx> component(int c);
    std::span<const cplx> component(int c) const;

    cplx& operator()(std::size_t node, int c = 0) { return values_[c * size() + node]; }
    cplx operator()(std::size_t node, int c = 0) const { return values_[c * size() + node]; }

    std::span<const cplx> values() const { return values_; }

    bool all_finite() const;
    Field conj() const;

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(cplx s);

    /// Field holding only component c.
    Field extract(int c) const;
    /// Overwrites component c with the single-component field f.
    void assign_component(int c, const Field& f);

private:
    void check_compatible(const Field& other) const;

    GridPtr grid_;
    int n_components_ = 0;
    std::vector<cplx> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(cplx s, Field a);
/// Pointwise product, component by component.
Field pointwise_product(const Field& a, const Field& b);

/// Field whose component c equals the constant values[c] everywhere.
Field constant_field(const GridPtr& grid, std::span<const cplx> values);

}  // namespace crsys::core
