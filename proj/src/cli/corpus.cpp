#include "crsys/cli/corpus.hpp"

#include <cmath>

#include "crsys/expr/parser.hpp"

namespace crsys::cli {

namespace {

using core::Field;
using core::cplx;

solver::ProblemSpec first_order(const std::string& rhs, cplx u0) {
    solver::ProblemSpec s;
    s.m = 1;
    s.mu = 0;
    s.nu = 1;
    s.rhs = {expr::parse(rhs)};
    if (u0 != cplx{}) s.initial_jet[{0, 0}] = {u0};
    return s;
}

// g = F(u) + zbar with F' chosen so that dbar g = F'(u) dbar u + 1 vanishes for
// solutions; also checks that g is reproduced by its Cauchy integral.
OracleResult holomorphy_oracle(const core::Jet& u, const ops::OperatorWorkspace& ws, const holder::PairSet& pairs,
                               const std::function<cplx(cplx)>& F, const std::function<cplx(cplx)>& dF) {
    const auto& grid = u.grid();
    Field g(u.grid_ptr(), 1);
    Field dbar_g(u.grid_ptr(), 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx v = u.value()(i);
        g(i) = F(v) + std::conj(grid.node(i));
        dbar_g(i) = dF(v) * u.at(0, 1)(i) + 1.0;
    }
    const double defect = holder::norm_alpha(dbar_g, pairs).norm_alpha;
    const Field gap = g - ops::op_S(g, ws);
    const double cauchy = holder::sup_norm(gap);
    OracleResult r;
    r.metrics = {{"dbar_g_norm", defect}, {"cauchy_gap", cauchy}};
    r.pass = defect <= 1e-2 && cauchy <= 1e-2;
    r.detail = "g is holomorphic when dbar g = 0 and g = S g";
    return r;
}

std::vector<CorpusProblem> build() {
    std::vector<CorpusProblem> out;

    CorpusProblem sq;
    sq.name = "dbar-u-squared";
    sq.description = "dbar u = u^2 with u(0) = 1/2; 1/u + zbar must be holomorphic";
    sq.spec = [] { return first_order("u0^2", 0.5); };
    sq.oracle = [](const core::Jet& u, const ops::OperatorWorkspace& ws, const holder::PairSet& pairs) {
        return holomorphy_oracle(
            u, ws, pairs, [](cplx v) { return 1.0 / v; }, [](cplx v) { return -1.0 / (v * v); });
    };
    out.push_back(sq);

    CorpusProblem ex;
    ex.name = "dbar-exp-u";
    ex.description = "dbar u = exp(u) with u(0) = 0; exp(-u) + zbar must be holomorphic";
    ex.spec = [] { return first_order("exp(u0)", 0.0); };
    ex.oracle = [](const core::Jet& u, const ops::OperatorWorkspace& ws, const holder::PairSet& pairs) {
        return holomorphy_oracle(
            u, ws, pairs, [](cplx v) { return std::exp(-v); }, [](cplx v) { return -std::exp(-v); });
    };
    out.push_back(ex);

    CorpusProblem li;
    li.name = "liouville-osserman";
    li.description = "d dbar u = exp(2u)/4 with zero 1-jet; exact radial solution -log(1 - |z|^2/4), "
                     "no solution beyond radius 2";
    li.spec = [] {
        solver::ProblemSpec s;
        s.m = 2;
        s.mu = 1;
        s.nu = 1;
        s.rhs = {expr::parse("exp(2*u0)/4")};
        return s;
    };
    li.oracle = [](const core::Jet& u, const ops::OperatorWorkspace&, const holder::PairSet&) {
        const auto& grid = u.grid();
        double err = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double exact = -std::log(1.0 - std::norm(grid.node(i)) / 4.0);
            err = std::max(err, std::abs(u.value()(i) - exact));
        }
        OracleResult r;
        r.metrics = {{"max_error_vs_radial", err}};
        r.pass = err <= 1e-6;
        r.detail = "compared with the radial solution -log(1 - |z|^2/4)";
        return r;
    };
    out.push_back(li);

    CorpusProblem mz;
    mz.name = "mizohata-demo";
    mz.description = "dbar u = F/(1+Re z) - ((1-Re z)/(1+Re z)) du with F = 1; the map is not a contraction";
    mz.kind = CorpusProblem::Kind::Probe;
    mz.spec = [] {
        solver::ProblemSpec s;
        s.m = 1;
        s.mu = 0;
        s.nu = 1;
        s.allow_top_order = true;
        const expr::Definitions defs{{"f", expr::parse("1")}};
        s.rhs = {expr::parse("(1/(1+re(z)))*f - ((1-re(z))/(1+re(z)))*d(0,1,0)", defs)};
        return s;
    };
    mz.probe_radii = {0.05, 0.1, 0.2};
    mz.probe_f = {"0.1*z"};
    mz.probe_g = {"0"};
    mz.probe_min = 0.9;
    out.push_back(mz);

    return out;
}

}  // namespace

const std::vector<CorpusProblem>& corpus() {
    static const std::vector<CorpusProblem> problems = build();
    return problems;
}

const CorpusProblem* find_corpus(const std::string& name) {
    for (const auto& p : corpus()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace crsys::cli
