#include "crsys/solver/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "crsys/core/cmath.hpp"
#include "crsys/core/error.hpp"
#include "crsys/expr/eval.hpp"
#include "crsys/expr/print.hpp"
#include "crsys/expr/wirtinger.hpp"
#include "crsys/holder/norms.hpp"
#include "crsys/ops/operators.hpp"
#include "crsys/solver/shift.hpp"
#include "crsys/solver/theta.hpp"

namespace crsys::solver {

void ConstantsConfig::validate() const {
    if (!(generic_C > 0.0)) throw InvalidArgument("constants: generic_C must be positive");
    if (n_samples < 1) throw InvalidArgument("constants: n_samples must be positive");
    if (safety < 1.0) throw InvalidArgument("constants: safety factor must be at least 1");
    if (holder_samples < 2) throw InvalidArgument("constants: holder_samples must be at least 2");
}

namespace {

constexpr int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                          59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

double radical_inverse(std::uint64_t index, int base) {
    double inv = 1.0 / base;
    double f = inv;
    double out = 0.0;
    while (index > 0) {
        out += f * static_cast<double>(index % base);
        index /= base;
        f *= inv;
    }
    return out;
}

// One point of E(R, gamma): z and the derivative slots.
struct Sample {
    cplx z;
    std::vector<cplx> eta;
};

std::string describe(const Sample& s, const std::vector<expr::DVar>& vars) {
    std::string out = "z=" + expr::format_double(s.z.real()) + "+" + expr::format_double(s.z.imag()) + "i";
    for (std::size_t k = 0; k < vars.size(); ++k) {
        out += " d(" + std::to_string(vars[k].comp) + "," + std::to_string(vars[k].di) + "," +
               std::to_string(vars[k].dbar) + ")=" + expr::format_double(s.eta[k].real()) + "+" +
               expr::format_double(s.eta[k].imag()) + "i";
    }
    return out;
}

}  // namespace

ConstantsEstimate constants_estimate(const ProblemSpec& input, double R, double gamma, const ConstantsConfig& cfg) {
    cfg.validate();
    if (!(R > 0.0) || !(gamma > 0.0)) throw InvalidArgument("constants_estimate: R and gamma must be positive");
    const ProblemSpec spec = shift_initial_values(input).shifted;
    const double C = cfg.generic_C;

    std::set<expr::DVar> var_set;
    for (const auto& a : spec.rhs) {
        const auto v = expr::free_vars(a);
        var_set.insert(v.begin(), v.end());
    }
    const std::vector<expr::DVar> vars(var_set.begin(), var_set.end());
    std::vector<double> bounds;
    bool top_order = false;
    for (const auto& v : vars) {
        bounds.push_back(C * core::ipow(R, spec.m - v.order()) * gamma);
        top_order = top_order || v.order() >= spec.m;
    }

    // Derivatives in the slots (these enter the Holder estimate) and in z.
    std::vector<expr::Expr> eta_derivs;
    std::vector<expr::Expr> z_derivs;
    for (const auto& a : spec.rhs) {
        for (const auto& v : vars) {
            for (bool conj : {false, true}) eta_derivs.push_back(expr::wirtinger_derive(a, expr::WirtingerVar::of(v), conj));
        }
        for (bool conj : {false, true}) z_derivs.push_back(expr::wirtinger_derive(a, expr::WirtingerVar::z_var(), conj));
    }

    // Shifted Halton points; the second half puts every slot on its bound circle.
    const int dims = 2 + 2 * static_cast<int>(vars.size());
    if (dims > static_cast<int>(std::size(primes))) throw InvalidArgument("constants_estimate: too many variables");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> shift(dims);
    for (double& s : shift) s = unit(rng);
    auto coord = [&](std::uint64_t idx, int d) {
        const double x = radical_inverse(idx + 1, primes[d]) + shift[d];
        return x - std::floor(x);
    };
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<Sample> samples;
    samples.reserve(2 * cfg.n_samples);
    for (int face = 0; face < 2; ++face) {
        for (int s = 0; s < cfg.n_samples; ++s) {
            const std::uint64_t idx = static_cast<std::uint64_t>(face) * cfg.n_samples + s;
            Sample smp;
            smp.z = std::polar(R * std::sqrt(coord(idx, 0)), two_pi * coord(idx, 1));
            for (std::size_t k = 0; k < vars.size(); ++k) {
                const double rad = face ? bounds[k] : bounds[k] * std::sqrt(coord(idx, 2 + 2 * k));
                smp.eta.push_back(std::polar(rad, two_pi * coord(idx, 3 + 2 * k)));
            }
            samples.push_back(std::move(smp));
        }
    }

    expr::Env env(spec.n, spec.rhs_order());
    std::vector<std::vector<double>> eta_values(samples.size());
    std::vector<std::vector<cplx>> eta_raw(samples.size());
    double A = 0.0;
    double z_sup = 0.0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        env.z = samples[s].z;
        for (std::size_t k = 0; k < vars.size(); ++k) env.set(vars[k], samples[s].eta[k]);
        try {
            for (const auto& d : eta_derivs) {
                const cplx v = expr::eval(d, env);
                eta_raw[s].push_back(v);
                A = std::max(A, std::abs(v));
            }
            for (const auto& d : z_derivs) z_sup = std::max(z_sup, std::abs(expr::eval(d, env)));
        } catch (const expr::EvalError& e) {
            throw Error("constants_estimate: " + e.message() + " at sample " + describe(samples[s], vars));
        }
    }
    A = std::max(A, z_sup);

    // Holder quotients of the slot derivatives between sample pairs, with the
    // max-norm distance over (z, eta).
    std::vector<std::size_t> chosen;
    const std::size_t per_half = std::min<std::size_t>(cfg.holder_samples / 2, cfg.n_samples);
    for (std::size_t s = 0; s < per_half; ++s) {
        chosen.push_back(s);
        chosen.push_back(cfg.n_samples + s);
    }
    double H = 0.0;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
        for (std::size_t b = a + 1; b < chosen.size(); ++b) {
            const Sample& x = samples[chosen[a]];
            const Sample& y = samples[chosen[b]];
            double dist = std::abs(x.z - y.z);
            for (std::size_t k = 0; k < vars.size(); ++k) dist = std::max(dist, std::abs(x.eta[k] - y.eta[k]));
            if (dist <= 0.0) continue;
            const double scale = std::pow(dist, -spec.alpha);
            for (std::size_t d = 0; d < eta_derivs.size(); ++d) {
                H = std::max(H, std::abs(eta_raw[chosen[a]][d] - eta_raw[chosen[b]][d]) * scale);
            }
        }
    }
    H = std::max(H, z_sup);

    ConstantsEstimate est;
    est.generic_C = C;
    est.R = R;
    est.gamma = gamma;
    est.A = A;
    est.H_alpha_A = H;
    double csum = 0.0;
    for (int l = 0; l <= spec.m - 1; ++l) csum += std::pow(core::ipow(R, spec.m - l - 1) * gamma, spec.alpha);
    est.C_of_R_gamma = 1.0 + C * csum;
    double rsum = 0.0;
    for (int p = 0; p <= spec.m - 1; ++p) rsum += core::ipow(R, spec.m - p);
    if (top_order) rsum += 1.0;
    const double sA = cfg.safety * A;
    const double sH = cfg.safety * H;
    est.delta = C * rsum * (sA + std::pow(2.0 * R, spec.alpha) * sH * est.C_of_R_gamma);
    for (const cplx v : rhs_at_origin(spec)) est.abs_a0 = std::max(est.abs_a0, std::abs(v));
    est.eta = C * est.abs_a0 + C * sA * R + C * est.delta;
    return est;
}

namespace {

double probe_at(const ProblemSpec& spec, double R, double gamma, const RadiusConfig& cfg) {
    const auto grid = core::build_grid(R, cfg.n_r, cfg.n_theta);
    const ops::OperatorWorkspace ws(grid);
    const holder::PairSet pairs(*grid, holder::HolderParams{spec.alpha});
    const auto [f, g] = default_probe_pair(spec, gamma, grid, pairs);
    try {
        return contraction_probe(f, g, spec, ws, pairs);
    } catch (const expr::EvalError&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

RadiusResult radius_search(const ProblemSpec& input, double gamma0, const RadiusConfig& cfg) {
    if (!(cfg.R_max > 0.0) || !(cfg.R_min > 0.0) || cfg.R_min > cfg.R_max) {
        throw InvalidArgument("radius_search: need 0 < R_min <= R_max");
    }
    const ProblemSpec spec = shift_initial_values(input).shifted;
    double a0 = 0.0;
    for (const cplx v : rhs_at_origin(spec)) a0 = std::max(a0, std::abs(v));
    if (!(gamma0 > 4.0 * cfg.constants.generic_C * a0)) {
        throw InvalidArgument("radius_search: gamma0 must exceed 4 C |a(0)| = " +
                              expr::format_double(4.0 * cfg.constants.generic_C * a0));
    }

    RadiusResult out;
    auto trial = [&](double R) {
        RadiusTrial t;
        t.R = R;
        const ConstantsEstimate est = constants_estimate(spec, R, gamma0, cfg.constants);
        t.delta = est.delta;
        t.eta = est.eta;
        t.admissible = est.delta <= 0.75 && est.eta <= 0.5 * gamma0;
        if (t.admissible && cfg.probe) {
            t.probe_delta = probe_at(spec, R, gamma0, cfg);
            t.admissible = t.probe_delta <= 0.75;
        }
        out.trail.push_back(t);
        if (t.admissible && R > out.R) {
            out.found = true;
            out.R = R;
            out.certificate = est;
            out.probe_delta = t.probe_delta;
        }
        return t.admissible;
    };

    double R = cfg.R_max;
    while (R >= cfg.R_min && !trial(R)) R *= 0.5;
    if (!out.found) {
        out.failure = "no admissible radius down to R_min = " + expr::format_double(cfg.R_min);
        return out;
    }
    if (R < cfg.R_max) {
        double lo = R;
        double hi = std::min(2.0 * R, cfg.R_max);
        for (int s = 0; s < cfg.bisect_steps; ++s) {
            const double mid = 0.5 * (lo + hi);
            if (trial(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    return out;
}

}  // namespace crsys::solver
