#include "crsys/cli/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <set>

#include "crsys/cli/corpus.hpp"
#include "crsys/expr/parser.hpp"

namespace crsys::cli {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    try {
        return j[key].get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

expr::Expr parse_rhs(const std::string& src, const expr::Definitions& defs, const std::string& where) {
    try {
        return expr::parse(src, defs);
    } catch (const expr::ParseError& e) {
        throw ConfigError(where + ": " + e.what() + " in \"" + src + "\"");
    }
}

// Definitions may refer to one another; resolve in dependency order.
expr::Definitions parse_definitions(const json& j) {
    expr::Definitions defs;
    if (j.is_null()) return defs;
    if (!j.is_object()) throw ConfigError("problem.definitions: expected an object of name -> expression");
    std::map<std::string, std::string> pending;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_string()) throw ConfigError("problem.definitions." + name + ": expected a string");
        pending[name] = value.get<std::string>();
    }
    while (!pending.empty()) {
        bool progress = false;
        std::string last_error;
        for (auto it = pending.begin(); it != pending.end();) {
            try {
                defs[it->first] = expr::parse(it->second, defs);
                it = pending.erase(it);
                progress = true;
            } catch (const expr::ParseError& e) {
                last_error = "problem.definitions." + it->first + ": " + e.what();
                ++it;
            }
        }
        if (!progress) throw ConfigError(last_error);
    }
    return defs;
}

}  // namespace

cplx parse_complex(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError(where + ": expected a number or [re, im]");
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

solver::ProblemSpec parse_problem(const json& j) {
    const std::string where = "problem";
    check_keys(j, {"m", "mu", "nu", "n", "alpha", "rhs", "definitions", "initial_jet", "psi", "allow_top_order"},
               where);
    solver::ProblemSpec s;
    s.m = get_or(j, "m", 1, where);
    s.mu = get_or(j, "mu", 0, where);
    s.nu = get_or(j, "nu", s.m - s.mu, where);
    s.n = get_or(j, "n", 1, where);
    s.alpha = get_or(j, "alpha", 0.5, where);
    s.allow_top_order = get_or(j, "allow_top_order", false, where);

    const auto defs = parse_definitions(j.contains("definitions") ? j["definitions"] : json());
    if (!j.contains("rhs")) throw ConfigError("problem.rhs: missing");
    const json& rhs = j["rhs"];
    if (rhs.is_string()) {
        s.rhs.push_back(parse_rhs(rhs.get<std::string>(), defs, "problem.rhs"));
    } else if (rhs.is_array()) {
        for (std::size_t c = 0; c < rhs.size(); ++c) {
            const std::string w = "problem.rhs[" + std::to_string(c) + "]";
            if (!rhs[c].is_string()) throw ConfigError(w + ": expected a string");
            s.rhs.push_back(parse_rhs(rhs[c].get<std::string>(), defs, w));
        }
    } else {
        throw ConfigError("problem.rhs: expected a string or a list of strings");
    }

    if (j.contains("initial_jet")) {
        const json& jet = j["initial_jet"];
        if (!jet.is_object()) throw ConfigError("problem.initial_jet: expected an object keyed \"i,j\"");
        for (const auto& [key, value] : jet.items()) {
            const std::string w = "problem.initial_jet." + key;
            int i = -1;
            int k = -1;
            char comma = 0;
            std::istringstream is(key);
            if (!(is >> i >> comma >> k) || comma != ',' || !is.eof()) throw ConfigError(w + ": key must read \"i,j\"");
            std::vector<cplx> values;
            // A bare number is allowed for scalar systems; otherwise one entry per component.
            if (value.is_number()) {
                values.push_back(parse_complex(value, w));
            } else if (value.is_array()) {
                for (std::size_t c = 0; c < value.size(); ++c) values.push_back(parse_complex(value[c], w));
            } else {
                throw ConfigError(w + ": expected a list with one value per component");
            }
            s.initial_jet[{i, k}] = values;
        }
    }

    if (j.contains("psi")) {
        const json& psi = j["psi"];
        if (!psi.is_array()) throw ConfigError("problem.psi: expected a list per component");
        for (std::size_t c = 0; c < psi.size(); ++c) {
            const std::string w = "problem.psi[" + std::to_string(c) + "]";
            if (!psi[c].is_array() || static_cast<int>(psi[c].size()) != s.m + 1) {
                throw ConfigError(w + ": expected m + 1 coefficients of z^m, z^(m-1) zbar, ..., zbar^m");
            }
            core::Polynomial p;
            for (int k = 0; k <= s.m; ++k) p.add_term(s.m - k, k, parse_complex(psi[c][k], w));
            s.psi.push_back(p);
        }
    }

    try {
        s.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    return s;
}

RunConfig parse_config(const json& j) {
    check_keys(j, {"problem", "grid", "holder", "solver", "radius_search", "probe", "output_dir"}, "config");
    RunConfig cfg;
    cfg.raw = j;
    if (!j.contains("problem")) throw ConfigError("config.problem: missing");
    const json& pj = j["problem"];
    if (pj.is_string()) {
        const CorpusProblem* problem = find_corpus(pj.get<std::string>());
        if (!problem) throw ConfigError("config.problem: unknown corpus problem '" + pj.get<std::string>() + "'");
        cfg.problem_name = problem->name;
        cfg.spec = problem->spec();
        cfg.grid = {problem->default_R, problem->n_r, problem->n_theta};
    } else {
        cfg.spec = parse_problem(pj);
    }

    if (j.contains("grid")) {
        const json& g = j["grid"];
        check_keys(g, {"R", "n_r", "n_theta"}, "grid");
        cfg.grid.R = get_or(g, "R", cfg.grid.R, "grid");
        cfg.grid.n_r = get_or(g, "n_r", cfg.grid.n_r, "grid");
        cfg.grid.n_theta = get_or(g, "n_theta", cfg.grid.n_theta, "grid");
    }
    if (!(cfg.grid.R > 0.0) || cfg.grid.n_r < 4 || cfg.grid.n_theta < 8 || cfg.grid.n_theta % 2 != 0) {
        throw ConfigError("grid: need R > 0, n_r >= 4 and an even n_theta >= 8");
    }

    cfg.holder.alpha = cfg.spec.alpha;
    if (j.contains("holder")) {
        const json& h = j["holder"];
        check_keys(h, {"pair_budget", "seed"}, "holder");
        cfg.holder.pair_budget = get_or<std::size_t>(h, "pair_budget", cfg.holder.pair_budget, "holder");
        cfg.holder.rng_seed = get_or<std::uint64_t>(h, "seed", cfg.holder.rng_seed, "holder");
        if (cfg.holder.pair_budget < 1) throw ConfigError("holder.pair_budget: must be positive");
    }

    if (j.contains("solver")) {
        const json& s = j["solver"];
        const std::string w = "solver";
        check_keys(s, {"max_iter", "tol_abs", "tol_rel", "divergence_cap", "gamma0", "generic_C", "n_samples",
                       "safety", "seed"},
                   w);
        cfg.solver.max_iter = get_or(s, "max_iter", cfg.solver.max_iter, w);
        cfg.solver.tol_abs = get_or(s, "tol_abs", cfg.solver.tol_abs, w);
        cfg.solver.tol_rel = get_or(s, "tol_rel", cfg.solver.tol_rel, w);
        cfg.solver.divergence_cap = get_or(s, "divergence_cap", cfg.solver.divergence_cap, w);
        cfg.solver.gamma0 = get_or(s, "gamma0", cfg.solver.gamma0, w);
        cfg.constants.generic_C = get_or(s, "generic_C", cfg.constants.generic_C, w);
        cfg.constants.n_samples = get_or(s, "n_samples", cfg.constants.n_samples, w);
        cfg.constants.safety = get_or(s, "safety", cfg.constants.safety, w);
        cfg.constants.seed = get_or<std::uint64_t>(s, "seed", cfg.constants.seed, w);
    }
    try {
        cfg.solver.validate();
        cfg.constants.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }

    cfg.radius.constants = cfg.constants;
    cfg.radius.n_r = cfg.grid.n_r;
    cfg.radius.n_theta = cfg.grid.n_theta;
    if (j.contains("radius_search")) {
        const json& r = j["radius_search"];
        const std::string w = "radius_search";
        check_keys(r, {"enabled", "R_max", "R_min", "probe", "bisect_steps"}, w);
        cfg.radius_search = get_or(r, "enabled", true, w);
        cfg.radius.R_max = get_or(r, "R_max", cfg.radius.R_max, w);
        cfg.radius.R_min = get_or(r, "R_min", cfg.radius.R_min, w);
        cfg.radius.probe = get_or(r, "probe", cfg.radius.probe, w);
        cfg.radius.bisect_steps = get_or(r, "bisect_steps", cfg.radius.bisect_steps, w);
    }

    if (j.contains("probe")) {
        const json& p = j["probe"];
        const std::string w = "probe";
        check_keys(p, {"radii", "f", "g", "gamma"}, w);
        cfg.probe.radii = get_or(p, "radii", cfg.probe.radii, w);
        cfg.probe.f = get_or(p, "f", cfg.probe.f, w);
        cfg.probe.g = get_or(p, "g", cfg.probe.g, w);
        cfg.probe.gamma = get_or(p, "gamma", cfg.probe.gamma, w);
        if (cfg.probe.f.size() != cfg.probe.g.size()) throw ConfigError("probe: f and g must both be given");
        if (!cfg.probe.f.empty() && static_cast<int>(cfg.probe.f.size()) != cfg.spec.n) {
            throw ConfigError("probe: need one expression per component");
        }
        for (double r : cfg.probe.radii) {
            if (!(r > 0.0)) throw ConfigError("probe.radii: radii must be positive");
        }
    }

    cfg.output_dir = get_or(j, "output_dir", cfg.output_dir, "config");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

}  // namespace crsys::cli
