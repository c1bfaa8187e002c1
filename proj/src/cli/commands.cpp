#include "crsys/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "crsys/cli/config.hpp"
#include "crsys/cli/corpus.hpp"
#include "crsys/cli/output.hpp"
#include "crsys/core/parallel.hpp"
#include "crsys/expr/parser.hpp"
#include "crsys/expr/wirtinger.hpp"

namespace crsys::cli {

namespace {

namespace fs = std::filesystem;

json jet_at_0_json(const std::map<std::pair<int, int>, std::vector<cplx>>& jet) {
    json out = json::object();
    for (const auto& [ij, values] : jet) {
        json vals = json::array();
        for (const auto& v : values) vals.push_back(complex_to_json(v));
        out[std::to_string(ij.first) + "," + std::to_string(ij.second)] = vals;
    }
    return out;
}

json constants_json(const solver::ConstantsEstimate& c) {
    return {{"R", c.R},         {"gamma", c.gamma},        {"A", c.A},     {"H_alpha_A", c.H_alpha_A},
            {"C_of_R_gamma", c.C_of_R_gamma}, {"delta", c.delta}, {"eta", c.eta}, {"generic_C", c.generic_C},
            {"abs_a0", c.abs_a0}};
}

json radius_json(const solver::RadiusResult& r) {
    json trail = json::array();
    for (const auto& t : r.trail) {
        trail.push_back({{"R", t.R}, {"delta", t.delta}, {"eta", t.eta}, {"probe_delta", t.probe_delta},
                         {"admissible", t.admissible}});
    }
    json out = {{"found", r.found}, {"R", r.R}, {"probe_delta", r.probe_delta}, {"trail", trail}};
    if (r.found) out["certificate"] = constants_json(r.certificate);
    if (!r.failure.empty()) out["failure"] = r.failure;
    return out;
}

void prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
}

// Solves at the configured (or searched) radius and writes all artifacts.
int execute_solve(const RunConfig& cfg, const CorpusProblem* problem, std::ostream& out) {
    prepare_dir(cfg.output_dir);
    json manifest = {{"config", cfg.raw},
                     {"problem", cfg.problem_name.empty() ? "inline" : cfg.problem_name},
                     {"threads", core::thread_count()}};

    double R = cfg.grid.R;
    if (cfg.radius_search) {
        const auto rs = solver::radius_search(cfg.spec, cfg.solver.gamma0, cfg.radius);
        manifest["radius_search"] = radius_json(rs);
        if (!rs.found) {
            manifest["status"] = "no_admissible_radius";
            manifest["failure"] = rs.failure;
            manifest["exit_code"] = kNumericalFailure;
            write_manifest(cfg.output_dir + "/manifest.json", manifest);
            out << "radius search failed: " << rs.failure << '\n';
            return kNumericalFailure;
        }
        R = rs.R;
    }
    manifest["grid"] = {{"R", R}, {"n_r", cfg.grid.n_r}, {"n_theta", cfg.grid.n_theta}};

    const auto grid = core::build_grid(R, cfg.grid.n_r, cfg.grid.n_theta);
    const ops::OperatorWorkspace ws(grid);
    holder::HolderParams hp = cfg.holder;
    hp.alpha = cfg.spec.alpha;
    const holder::PairSet pairs(*grid, hp);

    const solver::SolveReport report = solver::solve(cfg.spec, cfg.solver, ws, pairs);
    const bool converged = report.status == solver::Status::Converged;
    manifest["status"] = solver::to_string(report.status);
    manifest["failure"] = report.failure;
    manifest["iterations"] = report.iterations;
    manifest["final_norm"] = report.iterate_norms.empty() ? 0.0 : report.iterate_norms.back();
    manifest["final_diff_norm"] = report.diff_norms.empty() ? 0.0 : report.diff_norms.back();
    manifest["final_residual"] = report.residual_history.empty() ? 0.0 : report.residual_history.back();
    manifest["empirical_delta"] = report.empirical_delta;
    manifest["final_jet_at_0"] = jet_at_0_json(report.final_jet_at_0);

    int code = converged ? kConverged : kNumericalFailure;
    if (converged && problem && problem->oracle) {
        const OracleResult oracle = problem->oracle(report.solution, ws, pairs);
        json metrics = json::object();
        for (const auto& [name, value] : oracle.metrics) metrics[name] = value;
        manifest["oracle"] = {{"pass", oracle.pass}, {"metrics", metrics}, {"detail", oracle.detail}};
        out << "oracle: " << (oracle.pass ? "pass" : "FAIL");
        for (const auto& [name, value] : oracle.metrics) out << ' ' << name << '=' << value;
        out << '\n';
        if (!oracle.pass) code = kNumericalFailure;
    }
    manifest["exit_code"] = code;

    write_field_csv(cfg.output_dir + "/field.csv", report.solution.value());
    write_residuals_csv(cfg.output_dir + "/residuals.csv", report);
    write_manifest(cfg.output_dir + "/manifest.json", manifest);

    out << "status: " << solver::to_string(report.status) << " after " << report.iterations << " iterations";
    if (!report.failure.empty()) out << " (" << report.failure << ')';
    out << "\nR = " << R << ", residual = " << manifest["final_residual"].get<double>()
        << ", empirical delta = " << report.empirical_delta << '\n';
    return code;
}

// Probe ratios over the configured radii; no artifacts beyond the manifest.
int execute_probe(const RunConfig& cfg, const std::vector<double>& radii, double lower_bound, std::ostream& out) {
    prepare_dir(cfg.output_dir);
    const double gamma = cfg.probe.gamma > 0.0 ? cfg.probe.gamma : cfg.solver.gamma0;
    json table = json::array();
    double min_ratio = std::numeric_limits<double>::infinity();
    out << std::setw(10) << "R" << std::setw(16) << "delta_hat" << std::setw(16) << "delta_bound" << '\n';
    for (double R : radii) {
        const auto grid = core::build_grid(R, cfg.grid.n_r, cfg.grid.n_theta);
        const ops::OperatorWorkspace ws(grid);
        holder::HolderParams hp = cfg.holder;
        hp.alpha = cfg.spec.alpha;
        const holder::PairSet pairs(*grid, hp);
        core::Jet f;
        core::Jet g;
        if (cfg.probe.f.empty()) {
            std::tie(f, g) = solver::default_probe_pair(cfg.spec, gamma, grid, pairs);
        } else {
            std::vector<core::Jet> fs, gs;
            for (int c = 0; c < cfg.spec.n; ++c) {
                fs.push_back(expr::sample_jet(expr::parse(cfg.probe.f[c]), grid, cfg.spec.m));
                gs.push_back(expr::sample_jet(expr::parse(cfg.probe.g[c]), grid, cfg.spec.m));
            }
            f = core::stack_components(fs);
            g = core::stack_components(gs);
        }
        const double ratio = solver::contraction_probe(f, g, cfg.spec, ws, pairs);
        const auto est = solver::constants_estimate(cfg.spec, R, gamma, cfg.constants);
        min_ratio = std::min(min_ratio, ratio);
        table.push_back({{"R", R}, {"delta_hat", ratio}, {"constants", constants_json(est)}});
        out << std::setw(10) << R << std::setw(16) << ratio << std::setw(16) << est.delta << '\n';
    }
    const bool pass = min_ratio >= lower_bound;
    json manifest = {{"config", cfg.raw},
                     {"problem", cfg.problem_name.empty() ? "inline" : cfg.problem_name},
                     {"status", "probed"},
                     {"probe", table},
                     {"min_delta_hat", min_ratio},
                     {"threads", core::thread_count()}};
    if (lower_bound > 0.0) manifest["expected_min_delta_hat"] = lower_bound;
    const int code = pass ? kConverged : kNumericalFailure;
    manifest["exit_code"] = code;
    write_manifest(cfg.output_dir + "/manifest.json", manifest);
    return code;
}

// Reads just enough of a broken config to record the failure next to its outputs.
void record_config_error(const std::string& config_path, const std::string& message) {
    try {
        std::ifstream in(config_path);
        const json j = json::parse(in);
        if (!j.contains("output_dir") || !j["output_dir"].is_string()) return;
        const std::string dir = j["output_dir"].get<std::string>();
        prepare_dir(dir);
        write_manifest(dir + "/manifest.json",
                       {{"status", "config_error"}, {"failure", message}, {"exit_code", kConfigError}});
    } catch (const std::exception&) {
        // Nothing usable to record against.
    }
}

template <typename Body>
int guarded(const std::string& config_path, std::ostream& err, const Body& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        if (!config_path.empty()) record_config_error(config_path, e.what());
        return kConfigError;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        if (!config_path.empty()) record_config_error(config_path, e.what());
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace

int run_solve(const std::string& config_path, std::ostream& out, std::ostream& err) {
    return guarded(config_path, err, [&] {
        const RunConfig cfg = load_config(config_path);
        return execute_solve(cfg, cfg.problem_name.empty() ? nullptr : find_corpus(cfg.problem_name), out);
    });
}

int run_probe(const std::string& config_path, std::ostream& out, std::ostream& err) {
    return guarded(config_path, err, [&] {
        RunConfig cfg = load_config(config_path);
        const CorpusProblem* problem = cfg.problem_name.empty() ? nullptr : find_corpus(cfg.problem_name);
        if (problem && problem->kind == CorpusProblem::Kind::Probe && cfg.probe.f.empty()) {
            cfg.probe.f = problem->probe_f;
            cfg.probe.g = problem->probe_g;
        }
        std::vector<double> radii = cfg.probe.radii;
        if (radii.empty()) radii = problem && !problem->probe_radii.empty() ? problem->probe_radii
                                                                            : std::vector<double>{cfg.grid.R};
        return execute_probe(cfg, radii, problem ? problem->probe_min : 0.0, out);
    });
}

int run_corpus_list(std::ostream& out) {
    for (const auto& p : corpus()) {
        out << std::left << std::setw(22) << p.name << ' '
            << (p.kind == CorpusProblem::Kind::Solve ? "solve" : "probe") << "  " << p.description << '\n';
    }
    return kConverged;
}

int run_corpus(const std::string& name, std::optional<double> radius, const std::string& output_dir,
               std::ostream& out, std::ostream& err) {
    const CorpusProblem* problem = find_corpus(name);
    if (!problem) {
        err << "unknown corpus problem '" << name << "'; see corpus --list\n";
        return kConfigError;
    }
    return guarded("", err, [&] {
        json raw = {{"problem", name}, {"output_dir", output_dir}};
        if (radius) raw["grid"] = {{"R", *radius}};
        if (problem->kind == CorpusProblem::Kind::Probe && radius) raw["probe"] = {{"radii", {*radius}}};
        RunConfig cfg = parse_config(raw);
        if (problem->kind == CorpusProblem::Kind::Solve) return execute_solve(cfg, problem, out);
        cfg.probe.f = problem->probe_f;
        cfg.probe.g = problem->probe_g;
        const std::vector<double> radii = radius ? std::vector<double>{*radius} : problem->probe_radii;
        return execute_probe(cfg, radii, problem->probe_min, out);
    });
}

}  // namespace crsys::cli
