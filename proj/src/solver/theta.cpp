#include "crsys/solver/theta.hpp"

#include "crsys/core/cmath.hpp"
#include "crsys/core/error.hpp"

namespace crsys::solver {

core::Jet omega_map(const core::Jet& f, const ProblemSpec& spec, const ops::OperatorWorkspace& ws) {
    const core::Field h = evaluate_rhs(spec, f);
    return ops::compose_T(core::Jet(0, {h}), spec.mu, spec.nu, ws);
}

std::vector<core::Polynomial> taylor_at_origin(const core::Jet& jet, int degree) {
    std::vector<core::Polynomial> out(jet.n_components());
    for (int c = 0; c < jet.n_components(); ++c) {
        for (int p = 0; p <= degree; ++p) {
            for (int j = 0; j <= p; ++j) {
                const int i = p - j;
                const cplx v = jet.at_node(i, j, core::DiskGrid::center, c);
                out[c].add_term(i, j, v / (core::factorial(i) * core::factorial(j)));
            }
        }
    }
    return out;
}

core::Jet theta_map(const core::Jet& f, const ProblemSpec& spec, const ops::OperatorWorkspace& ws) {
    core::Jet omega = omega_map(f, spec, ws);
    const auto correction = taylor_at_origin(omega, spec.m - 1);
    omega -= core::polynomial_jet(correction, omega.grid_ptr(), spec.m);
    return omega;
}

double residual(const core::Jet& u, const ProblemSpec& spec, const holder::PairSet& pairs) {
    if (u.order() < spec.m) throw InvalidArgument("residual: jet must cover order m");
    core::Field defect = u.at(spec.mu, spec.nu);
    defect -= evaluate_rhs(spec, u);
    return holder::norm_alpha(defect, pairs).norm_alpha;
}

double contraction_probe(const core::Jet& f, const core::Jet& g, const ProblemSpec& spec,
                         const ops::OperatorWorkspace& ws, const holder::PairSet& pairs) {
    const double denom = holder::norm_k(f - g, pairs, spec.m).norm_alpha;
    if (!(denom > 0.0)) throw InvalidArgument("contraction_probe: f and g coincide in the order-m norm");
    const core::Jet diff = theta_map(f, spec, ws) - theta_map(g, spec, ws);
    return holder::norm_k(diff, pairs, spec.m).norm_alpha / denom;
}

std::pair<core::Jet, core::Jet> default_probe_pair(const ProblemSpec& spec, double gamma,
                                                   const core::GridPtr& grid, const holder::PairSet& pairs) {
    const core::Polynomial mono = core::Polynomial::monomial(spec.mu, spec.nu);
    const double scale = holder::norm_k(core::polynomial_jet(mono, grid, spec.m), pairs, spec.m).norm_alpha;
    const core::Polynomial p = (0.5 * gamma / scale) * mono;
    const std::vector<core::Polynomial> comps(spec.n, p);
    core::Jet f = core::polynomial_jet(comps, grid, spec.m);
    core::Jet g = core::polynomial_jet(std::vector<core::Polynomial>(spec.n, -1.0 * p), grid, spec.m);
    return {std::move(f), std::move(g)};
}

}  // namespace crsys::solver
