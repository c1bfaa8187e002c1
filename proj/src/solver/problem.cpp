#include "crsys/solver/problem.hpp"

#include <string>

#include "crsys/core/error.hpp"
#include "crsys/expr/eval.hpp"

namespace crsys::solver {

void ProblemSpec::validate() const {
    if (m < 1) throw InvalidArgument("spec: m must be at least 1");
    if (mu < 0 || nu < 0 || mu + nu != m) throw InvalidArgument("spec: mu + nu must equal m");
    if (n < 1) throw InvalidArgument("spec: n must be at least 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("spec: alpha must lie in (0, 1)");
    if (static_cast<int>(rhs.size()) != n) {
        throw InvalidArgument("spec: expected " + std::to_string(n) + " right-hand sides, got " +
                              std::to_string(rhs.size()));
    }
    for (const auto& a : rhs) {
        if (!a) throw InvalidArgument("spec: missing right-hand side");
        expr::check_vars(a, n, rhs_order());
    }
    for (const auto& [ij, values] : initial_jet) {
        if (ij.first < 0 || ij.second < 0 || ij.first + ij.second > m - 1) {
            throw InvalidArgument("spec: initial jet entry (" + std::to_string(ij.first) + "," +
                                  std::to_string(ij.second) + ") is not of order <= m - 1");
        }
        if (static_cast<int>(values.size()) != n) throw InvalidArgument("spec: initial jet entry has wrong size");
    }
    if (!psi.empty() && static_cast<int>(psi.size()) != n) throw InvalidArgument("spec: psi has wrong size");
    for (const auto& p : psi) {
        if (!p.is_homogeneous(m)) throw InvalidArgument("spec: psi must be homogeneous of degree m");
        // d^mu dbar^nu psi would add a constant to the equation.
        if (p.coefficient(mu, nu) != cplx{}) {
            throw InvalidArgument("spec: psi must not contain the monomial z^mu zbar^nu");
        }
    }
}

bool ProblemSpec::has_zero_jet() const {
    for (const auto& [ij, values] : initial_jet) {
        for (const auto& v : values) {
            if (v != cplx{}) return false;
        }
    }
    return true;
}

cplx ProblemSpec::jet_value(int i, int j, int comp) const {
    auto it = initial_jet.find({i, j});
    return it == initial_jet.end() ? cplx{} : it->second.at(comp);
}

core::Polynomial ProblemSpec::psi_component(int comp) const {
    return psi.empty() ? core::Polynomial{} : psi.at(comp);
}

core::Field evaluate_rhs(const ProblemSpec& spec, const core::Jet& u) {
    const int order = spec.rhs_order();
    if (u.order() < order) throw InvalidArgument("evaluate_rhs: jet order below the right-hand side order");
    if (u.n_components() != spec.n) throw InvalidArgument("evaluate_rhs: component count mismatch");
    const auto& grid = u.grid();
    core::Field out(u.grid_ptr(), spec.n);
    expr::Env env(spec.n, order);
    for (std::size_t node = 0; node < grid.size(); ++node) {
        env.z = grid.node(node);
        for (int c = 0; c < spec.n; ++c) {
            for (int p = 0; p <= order; ++p) {
                for (int j = 0; j <= p; ++j) env.set({c, p - j, j}, u.at_node(p - j, j, node, c));
            }
        }
        for (int c = 0; c < spec.n; ++c) {
            try {
                out(node, c) = expr::eval(spec.rhs[c], env);
            } catch (const expr::EvalError& e) {
                throw expr::EvalError(e.message() + " at node " + std::to_string(node), e.offset());
            }
        }
    }
    return out;
}

std::vector<cplx> rhs_at_origin(const ProblemSpec& spec) {
    expr::Env env(spec.n, spec.rhs_order());
    std::vector<cplx> out;
    for (const auto& a : spec.rhs) out.push_back(expr::eval(a, env));
    return out;
}

}  // namespace crsys::solver
