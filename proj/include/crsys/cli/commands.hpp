#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace crsys::cli {

enum ExitCode : int { kConverged = 0, kConfigError = 1, kNumericalFailure = 2 };

int run_solve(const std::string& config_path, std::ostream& out, std::ostream& err);
int run_probe(const std::string& config_path, std::ostream& out, std::ostream& err);
int run_corpus_list(std::ostream& out);
/// Solves (or probes) a registered problem; writes artifacts under output_dir.
int run_corpus(const std::string& name, std::optional<double> radius, const std::string& output_dir,
               std::ostream& out, std::ostream& err);

struct ValidateOptions {
    std::string suite = "all";
    int n_r = 48;
    int n_theta = 96;
};
/// Runs the property suites; nonzero exit iff a check fails.
int run_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace crsys::cli
