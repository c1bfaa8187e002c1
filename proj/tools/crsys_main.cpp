#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "crsys/cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Nonlinear Cauchy-Riemann systems on small disks"};
    app.require_subcommand(1);

    std::string solve_config;
    auto* solve = app.add_subcommand("solve", "Solve the problem described by a JSON config");
    solve->add_option("--config", solve_config, "Config file")->required();

    std::string probe_config;
    auto* probe = app.add_subcommand("probe", "Measure the contraction ratio of the corrected map");
    probe->add_option("--config", probe_config, "Config file")->required();

    bool list = false;
    std::string run_name;
    std::optional<double> radius;
    std::string output_dir;
    auto* corpus = app.add_subcommand("corpus", "Registered validation problems");
    corpus->add_flag("--list", list, "List registered problems");
    corpus->add_option("--run", run_name, "Run the named problem");
    corpus->add_option("--radius", radius, "Override the disk radius");
    corpus->add_option("--output", output_dir, "Output directory (default out/<name>)");

    crsys::cli::ValidateOptions vopts;
    auto* validate = app.add_subcommand("validate", "Run the property suites");
    validate->add_option("--suite", vopts.suite, "all, operators, holder or solver")->required();
    validate->add_option("--n-r", vopts.n_r, "Radial nodes for the operator suite");
    validate->add_option("--n-theta", vopts.n_theta, "Angular nodes for the operator suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : crsys::cli::kConfigError;
    }

    if (solve->parsed()) return crsys::cli::run_solve(solve_config, std::cout, std::cerr);
    if (probe->parsed()) return crsys::cli::run_probe(probe_config, std::cout, std::cerr);
    if (validate->parsed()) return crsys::cli::run_validate(vopts, std::cout, std::cerr);
    if (list) return crsys::cli::run_corpus_list(std::cout);
    if (run_name.empty()) {
        std::cerr << "corpus: give --list or --run <name>\n";
        return crsys::cli::kConfigError;
    }
    if (output_dir.empty()) output_dir = "out/" + run_name;
    return crsys::cli::run_corpus(run_name, radius, output_dir, std::cout, std::cerr);
}
