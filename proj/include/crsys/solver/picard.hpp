#pragma once

#include <string>
#include <vector>

#include "crsys/solver/theta.hpp"

namespace crsys::solver {

struct SolverConfig {
    int max_iter = 200;
    double tol_abs = 1e-8;
    double tol_rel = 1e-8;
    double gamma0 = 8.0;
    /// Iterates with ||u_N||^(m) above this are declared diverged; <= 0 means 10 gamma0.
    double divergence_cap = 0.0;

    double cap() const { return divergence_cap > 0.0 ? divergence_cap : 10.0 * gamma0; }
    void validate() const;
};

enum class Status { Converged, Diverged, MaxIter };
const char* to_string(Status s);

struct SolveReport {
    Status status = Status::MaxIter;
    std::string failure;
    int iterations = 0;
    /// ||u_{N+1} - u_N||^(m) per step.
    std::vector<double> diff_norms;
    /// diff_norms[N] / diff_norms[N-1].
    std::vector<double> contraction_ratios;
    /// ||u_N||^(m) per iterate.
    std::vector<double> iterate_norms;
    /// Residual of each new iterate.
    std::vector<double> residual_history;
    /// Largest contraction ratio once the differences decrease monotonically.
    double empirical_delta = 0.0;
    /// (i, j) -> d^i dbar^j u(0) per component, i + j <= m - 1.
    std::map<std::pair<int, int>, std::vector<cplx>> final_jet_at_0;
    /// Last iterate with its jet of order m.
    core::Jet solution;
};

/// Iterates u_1 = psi, u_{N+1} = psi + Theta(u_N) for a zero-jet problem.
SolveReport picard_solve(const ProblemSpec& spec, const SolverConfig& cfg, const ops::OperatorWorkspace& ws,
                         const holder::PairSet& pairs);

/// Shifts nonzero initial data away, runs picard_solve and adds the shift back.
SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg, const ops::OperatorWorkspace& ws,
                  const holder::PairSet& pairs);

}  // namespace crsys::solver
