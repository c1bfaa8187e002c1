#include "crsys/core/field.hpp"

#include <cmath>

#include "crsys/core/error.hpp"

namespace crsys::core {

Field::Field(GridPtr grid, int n_components)
    : grid_(std::move(grid)), n_components_(n_components) {
    if (!grid_) throw InvalidArgument("Field: null grid");
    if (n_components < 1) throw InvalidArgument("Field: need at least one component");
    values_.assign(grid_->size() * n_components, cplx{});
}

Field::Field(GridPtr grid, int n_components, std::vector<cplx> values)
    : grid_(std::move(grid)), n_components_(n_components), values_(std::move(values)) {
    if (!grid_) throw InvalidArgument("Field: null grid");
    if (n_components < 1) throw InvalidArgument("Field: need at least one component");
    if (values_.size() != grid_->size() * n_components) {
        throw InvalidArgument("Field: value count does not match grid size");
    }
}

std::span<cplx> Field::component(int c) {
    return std::span<cplx>(values_).subspan(c * size(), size());
}

std::span<const cplx> Field::component(int c) const {
    return std::span<const cplx>(values_).subspan(c * size(), size());
}

bool Field::all_finite() const {
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

Field Field::conj() const {
    Field out = *this;
    for (auto& v : out.values_) v = std::conj(v);
    return out;
}

void Field::check_compatible(const Field& other) const {
    if (grid_ != other.grid_) throw InvalidArgument("Field: grids differ");
    if (n_components_ != other.n_components_) throw InvalidArgument("Field: component counts differ");
}

Field& Field::operator+=(const Field& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

Field& Field::operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
}

Field Field::extract(int c) const {
    if (c < 0 || c >= n_components_) throw InvalidArgument("Field::extract: bad component");
    auto span = component(c);
    return Field(grid_, 1, std::vector<cplx>(span.begin(), span.end()));
}

void Field::assign_component(int c, const Field& f) {
    if (c < 0 || c >= n_components_) throw InvalidArgument("Field::assign_component: bad component");
    if (f.grid_ != grid_ || f.n_components_ != 1) {
        throw InvalidArgument("Field::assign_component: incompatible field");
    }
    auto dst = component(c);
    auto src = f.component(0);
    std::copy(src.begin(), src.end(), dst.begin());
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(cplx s, Field a) { return a *= s; }

Field pointwise_product(const Field& a, const Field& b) {
    if (a.grid_ptr() != b.grid_ptr() || a.n_components() != b.n_components()) {
        throw InvalidArgument("pointwise_product: incompatible fields");
    }
    Field out(a.grid_ptr(), a.n_components());
    for (int c = 0; c < a.n_components(); ++c) {
        for (std::size_t i = 0; i < a.size(); ++i) out(i, c) = a(i, c) * b(i, c);
    }
    return out;
}

Field constant_field(const GridPtr& grid, std::span<const cplx> values) {
    Field out(grid, static_cast<int>(values.size()));
    for (int c = 0; c < out.n_components(); ++c) {
        for (auto& v : out.component(c)) v = values[c];
    }
    return out;
}

}  // namespace crsys::core
