#include "crsys/ops/operators.hpp"

#include <string>

#include "crsys/core/cmath.hpp"
#include "crsys/core/error.hpp"

namespace crsys::ops {

namespace {

using core::Field;
using core::Jet;

enum class Area { T, T2 };

// One scalar component through the tabulated radial rows.
void area_component(std::span<const cplx> in, std::span<cplx> out, Area kind, const OperatorWorkspace& ws) {
    const auto& g = ws.grid();
    const int nt = g.n_theta();
    const int rings = g.n_rings();
    const int band = ws.band();
    const int shift = kind == Area::T ? 1 : 2;
    const auto coeffs = ws.analyze(in);
    const cplx center = in[core::DiskGrid::center];

    // out_modes[t][n] holds the image of input mode n (output mode n - shift).
    std::vector<std::vector<cplx>> out_modes(rings, std::vector<cplx>(2 * band + 1));
    cplx center_value{};
    for (int n = -band; n <= band; ++n) {
        const auto prof = ws.profile(coeffs, center, n);
        const auto& rows = kind == Area::T ? ws.t_rows(n) : ws.t2_rows(n);
        for (int t = 0; t < rings; ++t) {
            cplx acc{};
            for (std::size_t j = 0; j < prof.size(); ++j) acc += rows[t][j] * prof[j];
            out_modes[t][n + band] = acc;
        }
        if (n == shift) {
            const auto& row = kind == Area::T ? ws.t_center_row() : ws.t2_center_row();
            for (std::size_t j = 0; j < prof.size(); ++j) center_value += row[j] * prof[j];
        }
    }

    out[core::DiskGrid::center] = center_value;
    for (int t = 0; t < rings; ++t) {
        for (int k = 0; k < nt; ++k) {
            cplx acc{};
            for (int n = -band; n <= band; ++n) acc += out_modes[t][n + band] * ws.twiddle(n - shift, k);
            out[g.node_index(t, k)] = acc;
        }
    }
}

Field area_op(const Field& f, Area kind, const OperatorWorkspace& ws) {
    Field out(f.grid_ptr(), f.n_components());
    for (int c = 0; c < f.n_components(); ++c) area_component(f.component(c), out.component(c), kind, ws);
    return out;
}

// Boundary Fourier coefficients b_n, |n| <= band, from the boundary ring.
std::vector<cplx> boundary_coefficients(std::span<const cplx> in, const OperatorWorkspace& ws) {
    const auto& g = ws.grid();
    const int nt = g.n_theta();
    const int band = ws.band();
    std::vector<cplx> b(2 * band + 1);
    for (int n = -band; n <= band; ++n) {
        cplx sum{};
        for (int k = 0; k < nt; ++k) sum += in[g.boundary_node(k)] * ws.twiddle(-n, k);
        b[n + band] = sum / static_cast<double>(nt);
    }
    return b;
}

// Evaluates sum_n coef[n] (r/R)^{p(n)} e^{i p(n) theta} over all nodes, where
// p(n) = n - drop and only n >= first contribute.
template <typename Coef>
void holomorphic_series(std::span<cplx> out, int first, int drop, const Coef& coef, const OperatorWorkspace& ws) {
    const auto& g = ws.grid();
    const int band = ws.band();
    const double R = g.radius();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const cplx w = g.node(i) / R;
        cplx acc{};
        for (int n = std::max(first, drop); n <= band; ++n) acc += coef(n) * core::ipow(w, n - drop);
        out[i] = acc;
    }
}

}  // namespace

Field op_T(const Field& f, const OperatorWorkspace& ws) { return area_op(f, Area::T, ws); }

Field op_Tbar(const Field& f, const OperatorWorkspace& ws) { return op_T(f.conj(), ws).conj(); }

Field op_T2(const Field& f, const OperatorWorkspace& ws) { return area_op(f, Area::T2, ws); }

Field op_S(const Field& f, const OperatorWorkspace& ws) {
    Field out(f.grid_ptr(), f.n_components());
    const int band = ws.band();
    for (int c = 0; c < f.n_components(); ++c) {
        const auto b = boundary_coefficients(f.component(c), ws);
        holomorphic_series(out.component(c), 0, 0, [&](int n) { return b[n + band]; }, ws);
    }
    return out;
}

Field op_Sbar(const Field& f, const OperatorWorkspace& ws) { return op_S(f.conj(), ws).conj(); }

Field op_dSb(const Field& f, int l, const OperatorWorkspace& ws) {
    if (l < 0) throw InvalidArgument("op_dSb: negative derivative order");
    Field out(f.grid_ptr(), f.n_components());
    const int band = ws.band();
    const double R = ws.grid().radius();
    const double scale = core::factorial(l) / core::ipow(R, l);
    for (int c = 0; c < f.n_components(); ++c) {
        const auto b = boundary_coefficients(f.component(c), ws);
        // d^l S_b f = -sum_{n >= l+2} l! C(n-2, l) b_n R^{-l} (z/R)^{n-2-l}
        holomorphic_series(
            out.component(c), l + 2, l + 2,
            [&](int n) { return -scale * core::binomial(n - 2, l) * b[n + band]; }, ws);
    }
    return out;
}

Field op_Sb(const Field& f, const OperatorWorkspace& ws) { return op_dSb(f, 0, ws); }

Field op_Tk(const Jet& f, int k, const OperatorWorkspace& ws) {
    if (k < 0) throw InvalidArgument("op_Tk: negative k");
    if (f.order() < k) {
        throw InvalidArgument("op_Tk: jet of order " + std::to_string(f.order()) + " cannot supply k = " +
                              std::to_string(k));
    }
    Field out = op_T2(f.at(k, 0), ws);
    for (int l = 1; l <= k; ++l) out -= op_dSb(f.at(k - l, 0), l, ws);
    return out;
}

Field derivative_of_T(const Jet& f, int i, int j, const OperatorWorkspace& ws) {
    if (i < 0 || j < 0) throw InvalidArgument("derivative_of_T: negative order");
    if (i + j > f.order() + 1) {
        throw InvalidArgument("derivative_of_T: order " + std::to_string(i + j) + " needs a jet of order " +
                              std::to_string(i + j - 1));
    }
    if (j >= 1) return f.at(i, j - 1);
    if (i == 0) return op_T(f.value(), ws);
    return op_Tk(f, i - 1, ws);
}

Jet apply_T(const Jet& f, const OperatorWorkspace& ws) {
    const int order = f.order() + 1;
    std::vector<Field> entries(Jet::entry_count(order));
    for (int p = 0; p <= order; ++p) {
        for (int j = 0; j <= p; ++j) entries[Jet::index(p - j, j)] = derivative_of_T(f, p - j, j, ws);
    }
    return Jet(order, std::move(entries));
}

Jet apply_Tbar(const Jet& f, const OperatorWorkspace& ws) { return apply_T(f.conj(), ws).conj(); }

Jet compose_T(const Jet& h, int mu, int nu, const OperatorWorkspace& ws) {
    if (mu < 0 || nu < 0) throw InvalidArgument("compose_T: negative power");
    Jet out = h;
    for (int s = 0; s < mu; ++s) out = apply_Tbar(out, ws);
    for (int s = 0; s < nu; ++s) out = apply_T(out, ws);
    return out;
}

Field compose_T(const Field& h, int mu, int nu, const OperatorWorkspace& ws) {
    if (mu < 0 || nu < 0) throw InvalidArgument("compose_T: negative power");
    Field out = h;
    for (int s = 0; s < mu; ++s) out = op_Tbar(out, ws);
    for (int s = 0; s < nu; ++s) out = op_T(out, ws);
    return out;
}

}  // namespace crsys::ops
