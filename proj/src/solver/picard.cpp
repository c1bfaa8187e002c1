#include "crsys/solver/picard.hpp"

#include <cmath>

#include "crsys/core/error.hpp"
#include "crsys/solver/shift.hpp"

namespace crsys::solver {

void SolverConfig::validate() const {
    if (max_iter < 1) throw InvalidArgument("solver: max_iter must be positive");
    if (tol_abs < 0.0 || tol_rel < 0.0) throw InvalidArgument("solver: tolerances must be nonnegative");
    if (!(gamma0 > 0.0)) throw InvalidArgument("solver: gamma0 must be positive");
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Converged: return "converged";
        case Status::Diverged: return "diverged";
        case Status::MaxIter: return "max_iter";
    }
    return "unknown";
}

namespace {

void record_jet_at_0(SolveReport& r, int m) {
    const core::Jet& u = r.solution;
    for (int p = 0; p <= m - 1; ++p) {
        for (int j = 0; j <= p; ++j) {
            std::vector<cplx> values;
            for (int c = 0; c < u.n_components(); ++c) values.push_back(u.at_node(p - j, j, core::DiskGrid::center, c));
            r.final_jet_at_0[{p - j, j}] = std::move(values);
        }
    }
}

// Largest ratio over the final run of decreasing differences.
double tail_ratio(const std::vector<double>& diffs) {
    if (diffs.size() < 2) return 0.0;
    std::size_t start = diffs.size() - 1;
    while (start > 0 && diffs[start] <= diffs[start - 1]) --start;
    double best = 0.0;
    for (std::size_t k = std::max<std::size_t>(start, 1); k < diffs.size(); ++k) {
        if (diffs[k - 1] > 0.0) best = std::max(best, diffs[k] / diffs[k - 1]);
    }
    return best;
}

}  // namespace

SolveReport picard_solve(const ProblemSpec& spec, const SolverConfig& cfg, const ops::OperatorWorkspace& ws,
                         const holder::PairSet& pairs) {
    spec.validate();
    cfg.validate();
    if (!spec.has_zero_jet()) throw InvalidArgument("picard_solve: initial jet must be zero; shift it first");

    const auto& grid = ws.grid_ptr();
    std::vector<core::Polynomial> psi;
    for (int c = 0; c < spec.n; ++c) psi.push_back(spec.psi_component(c));
    const core::Jet psi_jet = core::polynomial_jet(psi, grid, spec.m);

    SolveReport r;
    core::Jet u = psi_jet;
    r.iterate_norms.push_back(holder::norm_k(u, pairs, spec.m).norm_alpha);
    r.solution = u;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        core::Jet next;
        try {
            next = psi_jet + theta_map(u, spec, ws);
        } catch (const expr::EvalError& e) {
            r.status = Status::Diverged;
            r.failure = e.what();
            break;
        }
        r.iterations = it;
        if (!next.all_finite()) {
            r.status = Status::Diverged;
            r.failure = "non-finite values in iterate " + std::to_string(it + 1);
            break;
        }
        const double diff = holder::norm_k(next - u, pairs, spec.m).norm_alpha;
        const double norm = holder::norm_k(next, pairs, spec.m).norm_alpha;
        if (!r.diff_norms.empty() && r.diff_norms.back() > 0.0) r.contraction_ratios.push_back(diff / r.diff_norms.back());
        r.diff_norms.push_back(diff);
        r.iterate_norms.push_back(norm);
        try {
            r.residual_history.push_back(residual(next, spec, pairs));
        } catch (const expr::EvalError&) {
            r.residual_history.push_back(std::nan(""));
        }
        const double previous = r.iterate_norms[r.iterate_norms.size() - 2];
        u = std::move(next);
        r.solution = u;
        if (!std::isfinite(norm) || norm > cfg.cap()) {
            r.status = Status::Diverged;
            r.failure = "iterate norm exceeded the divergence cap " + std::to_string(cfg.cap());
            break;
        }
        if (diff <= cfg.tol_abs + cfg.tol_rel * previous) {
            r.status = Status::Converged;
            break;
        }
    }
    if (r.status == Status::MaxIter && r.failure.empty()) r.failure = "iteration limit reached";
    if (r.status == Status::Converged) r.failure.clear();
    r.empirical_delta = tail_ratio(r.diff_norms);
    record_jet_at_0(r, spec.m);
    return r;
}

SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg, const ops::OperatorWorkspace& ws,
                  const holder::PairSet& pairs) {
    if (spec.has_zero_jet()) return picard_solve(spec, cfg, ws, pairs);
    const ShiftResult shift = shift_initial_values(spec);
    SolveReport r = picard_solve(shift.shifted, cfg, ws, pairs);
    r.solution = shift.recombine(r.solution);
    r.final_jet_at_0.clear();
    record_jet_at_0(r, spec.m);
    return r;
}

}  // namespace crsys::solver
