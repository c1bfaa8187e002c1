#pragma once

#include <vector>

#include "crsys/core/field.hpp"

namespace crsys::core {

/// Derivative bundle {d^i dbar^j u : i + j <= k} of a field.
///
/// Mixed Wirtinger derivatives commute for the C^k functions handled here,
/// so only the k + 1 distinct pairs (i, j) of each total order are stored.
/// Entry (0, 0) is the field itself.
class Jet {
public:
    Jet() = default;
    Jet(int order, std::vector<Field> derivs);
    /// All-zero jet of the given order.
    Jet(const GridPtr& grid, int n_components, int order);

    static constexpr std::size_t index(int i, int j) {
        const int p = i + j;
        return static_cast<std::size_t>(p * (p + 1) / 2 + j);
    }
    static constexpr std::size_t entry_count(int order) {
        return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    }

    int order() const { return order_; }
    int n_components() const { return derivs_.empty() ? 0 : derivs_.front().n_components(); }
    const GridPtr& grid_ptr() const { return derivs_.front().grid_ptr(); }
    const DiskGrid& grid() const { return derivs_.front().grid(); }

    const Field& at(int i, int j) const;
    Field& at(int i, int j);
    const Field& value() const { return derivs_.front(); }

    /// d^i dbar^j of component c at one node.
    cplx at_node(int i, int j, std::size_t node, int c = 0) const { return at(i, j)(node, c); }

    /// Jet restricted to orders <= k.
    Jet truncated(int k) const;
    /// Jet of the conjugate field: entry (i, j) is conj of entry (j, i).
    Jet conj() const;
    Jet extract(int c) const;

    bool all_finite() const;

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);

private:
    int order_ = -1;
    std::vector<Field> derivs_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);

/// Assembles a multi-component jet from single-component jets of equal order.
Jet stack_components(const std::vector<Jet>& parts);

/// Taylor polynomial of degree k built from the jet at `node`, evaluated at zeta:
///   sum_{i+j<=k} d^i dbar^j f(c) / (i! j!) (zeta - c)^i conj(zeta - c)^j.
/// Returns one value per component.
std::vector<cplx> taylor_eval(const Jet& jet, std::size_t node, int degree, cplx zeta);

}  // namespace crsys::core
