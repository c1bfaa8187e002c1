#pragma once

#include "crsys/holder/norms.hpp"
#include "crsys/ops/operators.hpp"
#include "crsys/solver/problem.hpp"

namespace crsys::solver {

/// omega(f) = T^nu Tbar^mu a(z, f, D^1 f, ...), returned with its jet of order m.
core::Jet omega_map(const core::Jet& f, const ProblemSpec& spec, const ops::OperatorWorkspace& ws);

/// Taylor polynomial of degree m - 1 at the origin built from a jet's
/// values at the center node, one polynomial per component.
std::vector<core::Polynomial> taylor_at_origin(const core::Jet& jet, int degree);

/// Theta(f) = omega(f) minus its own Taylor polynomial of degree m - 1 at 0,
/// so every derivative of order <= m - 1 vanishes at the origin.
core::Jet theta_map(const core::Jet& f, const ProblemSpec& spec, const ops::OperatorWorkspace& ws);

/// Holder norm of d^mu dbar^nu u - a(z, u, ...), using the jet entry of u.
double residual(const core::Jet& u, const ProblemSpec& spec, const holder::PairSet& pairs);

/// Empirical Lipschitz ratio ||Theta f - Theta g||^(m) / ||f - g||^(m).
double contraction_probe(const core::Jet& f, const core::Jet& g, const ProblemSpec& spec,
                         const ops::OperatorWorkspace& ws, const holder::PairSet& pairs);

/// Default probe pair f = (gamma/2) z^mu zbar^nu / ||z^mu zbar^nu||^(m), g = -f,
/// in every component.
std::pair<core::Jet, core::Jet> default_probe_pair(const ProblemSpec& spec, double gamma,
                                                   const core::GridPtr& grid, const holder::PairSet& pairs);

}  // namespace crsys::solver
