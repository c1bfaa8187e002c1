#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "crsys/cli/commands.hpp"
#include "crsys/cli/corpus.hpp"
#include "crsys/core/polynomial.hpp"
#include "crsys/expr/parser.hpp"
#include "crsys/ops/direct.hpp"
#include "crsys/ops/monomial.hpp"
#include "crsys/solver/picard.hpp"

namespace crsys::cli {

namespace {

using core::cplx;
using core::Field;
using core::Polynomial;

class Checker {
public:
    explicit Checker(std::ostream& out) : out_(out) {}

    // Passes when value <= bound (or >= bound with at_least).
    void check(const std::string& name, double value, double bound, bool at_least = false) {
        const bool ok = at_least ? value >= bound : value <= bound;
        failures_ += ok ? 0 : 1;
        out_ << (ok ? "PASS " : "FAIL ") << std::left << std::setw(48) << name << " value=" << std::setprecision(4)
             << value << (at_least ? " >= " : " <= ") << bound << '\n';
    }

    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

double max_error(const Field& f, const Polynomial& p) {
    double e = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) e = std::max(e, std::abs(f(i) - p(f.grid().node(i))));
    return e;
}

Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
    std::normal_distribution<double> g(0.0, 1.0);
    Polynomial p;
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; a + b <= degree; ++b) p.add_term(a, b, {g(rng), g(rng)});
    }
    return p;
}

// T of |z|^alpha against 2 |z|^alpha zbar / (2 + alpha).
double rough_error(int n_r, int n_theta, double alpha) {
    const auto grid = core::build_grid(1.0, n_r, n_theta);
    const ops::OperatorWorkspace ws(grid);
    Field f(grid, 1);
    for (std::size_t i = 0; i < grid->size(); ++i) f(i) = std::pow(grid->r(i), alpha);
    const Field Tf = ops::op_T(f, ws);
    double e = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const cplx exact = 2.0 * std::pow(grid->r(i), alpha) * std::conj(grid->node(i)) / (2.0 + alpha);
        e = std::max(e, std::abs(Tf(i) - exact));
    }
    return e;
}

void operators_suite(Checker& c, const ValidateOptions& o) {
    const double R = 1.0;
    const auto grid = core::build_grid(R, o.n_r, o.n_theta);
    const ops::OperatorWorkspace ws(grid);
    const Polynomial one = Polynomial::constant(1.0);
    const Polynomial z = Polynomial::monomial(1, 0);
    const Polynomial zb = Polynomial::monomial(0, 1);

    c.check("T(1) = zbar", max_error(ops::op_T(core::sample(one, grid), ws), zb), 5e-3);
    c.check("T(zbar) = zbar^2/2", max_error(ops::op_T(core::sample(zb, grid), ws), 0.5 * Polynomial::monomial(0, 2)),
            5e-3);
    c.check("T(z) = z zbar - R^2",
            max_error(ops::op_T(core::sample(z, grid), ws), Polynomial::monomial(1, 1) - Polynomial::constant(R * R)),
            5e-3);

    const std::vector<Polynomial> family = {zb, Polynomial::monomial(1, 1), Polynomial::monomial(0, 2),
                                            Polynomial::monomial(2, 1)};
    double reproduce = 0.0;
    double conjugate = 0.0;
    double derivative = 0.0;
    for (const auto& p : family) {
        const Field f = core::sample(p, grid);
        const Field lhs = ops::op_T(core::sample(p.derivative(0, 1), grid), ws) + ops::op_S(f, ws) - f;
        reproduce = std::max(reproduce, holder::sup_norm(lhs));
        const Field fc = f.conj();
        const Field lhs_c = ops::op_Tbar(core::sample(p.conj().derivative(1, 0), grid), ws) + ops::op_Sbar(fc, ws) - fc;
        conjugate = std::max(conjugate, holder::sup_norm(lhs_c));
        const Field d = ops::op_T2(f, ws) - ops::op_T(core::sample(p.derivative(1, 0), grid), ws) + ops::op_Sb(f, ws);
        derivative = std::max(derivative, holder::sup_norm(d));
    }
    c.check("T dbar f + S f - f", reproduce, 5e-3);
    c.check("Tbar d f + Sbar f - f", conjugate, 5e-3);
    c.check("2T f - T d f + S_b f", derivative, 1e-2);

    std::mt19937_64 rng(7);
    double excess = -1e300;
    for (int k = 0; k < 10; ++k) {
        const Field f = core::sample(random_polynomial(rng, 4), grid);
        excess = std::max(excess, holder::sup_norm(ops::op_T(f, ws)) - 4.0 * R * holder::sup_norm(f));
    }
    c.check("max|Tf| - 4R max|f| over random fields", excess, 5e-3);

    double moment = 0.0;
    for (auto [m, n] : {std::pair{2, 0}, {3, 0}, {3, 1}}) {
        moment = std::max(moment, std::abs(ops::direct::annulus_moment(m, n, {0.1, 0.05}, {0.12, 0.0}, 0.2, R)));
    }
    c.check("annulus moments vanish", moment, 1e-8);

    const auto f_smooth = [](cplx w) { return std::exp(w) * std::conj(w); };
    const Field fs = [&] {
        Field f(grid, 1);
        for (std::size_t i = 0; i < grid->size(); ++i) f(i) = f_smooth(grid->node(i));
        return f;
    }();
    const Field t2 = ops::op_T2(fs, ws);
    double direct_gap = 0.0;
    for (int ring : {3, o.n_r / 2, o.n_r - 4}) {
        const std::size_t node = grid->node_index(ring, 5);
        direct_gap = std::max(direct_gap, std::abs(t2(node) - ops::direct::T2(f_smooth, grid->node(node), R)));
    }
    c.check("2T against direct quadrature", direct_gap, 1e-6);

    const double alpha = 0.5;
    const double coarse = rough_error(o.n_r / 2, o.n_theta / 2, alpha);
    const double fine = rough_error(o.n_r, o.n_theta, alpha);
    c.check("refinement rate on |z|^alpha (log2 ratio)", std::log2(coarse / fine), alpha, true);
}

void holder_suite(Checker& c) {
    for (double R : {0.5, 1.0}) {
        const auto grid = core::build_grid(R, 16, 32);
        const holder::PairSet pairs(*grid, {0.5});
        const double nz = holder::norm_alpha(core::sample(Polynomial::monomial(1, 0), grid), pairs).norm_alpha;
        c.check("||z|| / 3R - 1 at R=" + std::to_string(R).substr(0, 3), std::abs(nz / (3 * R) - 1.0), 0.02);
    }
    const auto grid = core::build_grid(1.0, 8, 16);
    const holder::PairSet pairs(*grid, {0.5});
    std::mt19937_64 rng(11);
    double worst = -1e300;
    for (int k = 0; k < 20; ++k) {
        const Field f = core::sample(random_polynomial(rng, 3), grid);
        const Field g = core::sample(random_polynomial(rng, 3), grid);
        const double lhs = holder::norm_alpha(core::pointwise_product(f, g), pairs).norm_alpha;
        const double rhs = holder::norm_alpha(f, pairs).norm_alpha * holder::norm_alpha(g, pairs).norm_alpha;
        worst = std::max(worst, lhs - rhs);
    }
    c.check("||fg|| - ||f|| ||g|| (Banach algebra)", worst, 0.0);
}

void solver_suite(Checker& c) {
    const auto grid = core::build_grid(0.2, 16, 32);
    const ops::OperatorWorkspace ws(grid);
    const holder::PairSet pairs(*grid, {0.5});

    solver::ProblemSpec one;
    one.rhs = {expr::parse("1")};
    const auto r1 = solver::solve(one, {}, ws, pairs);
    c.check("a = 1 converges to zbar", max_error(r1.solution.value(), Polynomial::monomial(0, 1)), 1e-10);

    for (const char* name : {"dbar-u-squared", "dbar-exp-u", "liouville-osserman"}) {
        const CorpusProblem* p = find_corpus(name);
        const auto report = solver::solve(p->spec(), {}, ws, pairs);
        c.check(std::string(name) + " iterations", report.status == solver::Status::Converged ? report.iterations : 1e9,
                30);
        const OracleResult oracle = p->oracle(report.solution, ws, pairs);
        c.check(std::string(name) + " oracle " + oracle.metrics.front().first, oracle.metrics.front().second,
                oracle.metrics.front().first == "max_error_vs_radial" ? 1e-6 : 1e-2);
    }

    std::mt19937_64 rng(3);
    double jet = 0.0;
    for (int k = 0; k < 5; ++k) {
        solver::ProblemSpec s = find_corpus("liouville-osserman")->spec();
        const core::Jet f = core::polynomial_jet(random_polynomial(rng, 3), grid, 2);
        const core::Jet th = solver::theta_map(f, s, ws);
        const double scale = holder::norm_k(th, pairs, 2).norm_alpha;
        for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
            jet = std::max(jet, std::abs(th.at_node(i, j, core::DiskGrid::center)) / scale);
        }
    }
    c.check("Theta jet at 0 relative to its norm", jet, 1e-6);
}

}  // namespace

int run_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
    const std::string& s = opts.suite;
    if (s != "all" && s != "operators" && s != "holder" && s != "solver") {
        err << "unknown suite '" << s << "' (expected all, operators, holder or solver)\n";
        return kConfigError;
    }
    if (opts.n_r < 8 || opts.n_theta < 16 || opts.n_theta % 2 != 0) {
        err << "validate needs n_r >= 8 and an even n_theta >= 16\n";
        return kConfigError;
    }
    Checker c(out);
    try {
        if (s == "all" || s == "operators") operators_suite(c, opts);
        if (s == "all" || s == "holder") holder_suite(c);
        if (s == "all" || s == "solver") solver_suite(c);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    out << (c.failures() == 0 ? "all checks passed" : std::to_string(c.failures()) + " check(s) failed") << '\n';
    return c.failures() == 0 ? 0 : kNumericalFailure;
}

}  // namespace crsys::cli
