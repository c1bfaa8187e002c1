#include "crsys/core/jet.hpp"

#include <string>

#include "crsys/core/cmath.hpp"
#include "crsys/core/error.hpp"

namespace crsys::core {

Jet::Jet(int order, std::vector<Field> derivs) : order_(order), derivs_(std::move(derivs)) {
    if (order < 0) throw InvalidArgument("Jet: negative order");
    if (derivs_.size() != entry_count(order)) {
        throw InvalidArgument("Jet: expected " + std::to_string(entry_count(order)) +
                              " derivative fields, got " + std::to_string(derivs_.size()));
    }
    for (const auto& f : derivs_) {
        if (f.grid_ptr() != derivs_.front().grid_ptr() ||
            f.n_components() != derivs_.front().n_components()) {
            throw InvalidArgument("Jet: derivative fields are not compatible");
        }
    }
}

Jet::Jet(const GridPtr& grid, int n_components, int order) : order_(order) {
    if (order < 0) throw InvalidArgument("Jet: negative order");
    derivs_.assign(entry_count(order), Field(grid, n_components));
}

const Field& Jet::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) {
        throw InvalidArgument("Jet: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") exceeds order " + std::to_string(order_));
    }
    return derivs_[index(i, j)];
}

Field& Jet::at(int i, int j) {
    return const_cast<Field&>(static_cast<const Jet&>(*this).at(i, j));
}

Jet Jet::truncated(int k) const {
    if (k > order_) throw InvalidArgument("Jet::truncated: order too large");
    return Jet(k, std::vector<Field>(derivs_.begin(), derivs_.begin() + entry_count(k)));
}

Jet Jet::conj() const {
    std::vector<Field> out(derivs_.size());
    for (int p = 0; p <= order_; ++p) {
        for (int i = 0; i <= p; ++i) out[index(i, p - i)] = at(p - i, i).conj();
    }
    return Jet(order_, std::move(out));
}

Jet Jet::extract(int c) const {
    std::vector<Field> out;
    out.reserve(derivs_.size());
    for (const auto& f : derivs_) out.push_back(f.extract(c));
    return Jet(order_, std::move(out));
}

bool Jet::all_finite() const {
    for (const auto& f : derivs_) {
        if (!f.all_finite()) return false;
    }
    return true;
}

Jet& Jet::operator+=(const Jet& other) {
    if (other.order_ != order_) throw InvalidArgument("Jet: orders differ");
    for (std::size_t e = 0; e < derivs_.size(); ++e) derivs_[e] += other.derivs_[e];
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    if (other.order_ != order_) throw InvalidArgument("Jet: orders differ");
    for (std::size_t e = 0; e < derivs_.size(); ++e) derivs_[e] -= other.derivs_[e];
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet stack_components(const std::vector<Jet>& parts) {
    if (parts.empty()) throw InvalidArgument("stack_components: nothing to stack");
    const int order = parts.front().order();
    int total = 0;
    for (const auto& p : parts) {
        if (p.order() != order) throw InvalidArgument("stack_components: orders differ");
        total += p.n_components();
    }
    const auto& grid = parts.front().grid_ptr();
    Jet out(grid, total, order);
    for (int p = 0; p <= order; ++p) {
        for (int i = 0; i <= p; ++i) {
            int c = 0;
            for (const auto& part : parts) {
                for (int pc = 0; pc < part.n_components(); ++pc, ++c) {
                    out.at(p - i, i).assign_component(c, part.at(p - i, i).extract(pc));
                }
            }
        }
    }
    return out;
}

std::vector<cplx> taylor_eval(const Jet& jet, std::size_t node, int degree, cplx zeta) {
    if (degree > jet.order()) throw InvalidArgument("taylor_eval: jet order below requested degree");
    const cplx c = jet.grid().node(node);
    const cplx dz = zeta - c;
    const cplx dzb = std::conj(dz);

    std::vector<cplx> out(jet.n_components(), cplx{});
    for (int comp = 0; comp < jet.n_components(); ++comp) {
        for (int p = 0; p <= degree; ++p) {
            for (int j = 0; j <= p; ++j) {
                const int i = p - j;
                out[comp] += jet.at_node(i, j, node, comp) / (factorial(i) * factorial(j)) *
                             ipow(dz, i) * ipow(dzb, j);
            }
        }
    }
    return out;
}

}  // namespace crsys::core
