#pragma once

#include <string>
#include <vector>

#include "crsys/holder/norms.hpp"
#include "crsys/solver/constants.hpp"
#include "crsys/solver/picard.hpp"
#include "json.hpp"

namespace crsys::cli {

using json = nlohmann::json;
using core::cplx;

/// Malformed or inconsistent configuration; maps to exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct GridConfig {
    double R = 0.2;
    int n_r = 16;
    int n_theta = 32;
};

struct ProbeConfig {
    /// Radii to probe; empty means the grid radius.
    std::vector<double> radii;
    /// Probe fields as expressions in z, one per component. Empty means the
    /// default pair +-(gamma/2) z^mu zbar^nu / ||z^mu zbar^nu||^(m).
    std::vector<std::string> f;
    std::vector<std::string> g;
    /// Ball radius for the default pair; <= 0 means gamma0.
    double gamma = 0.0;
};

struct RunConfig {
    /// Corpus name when the problem was given by name, empty when inline.
    std::string problem_name;
    solver::ProblemSpec spec;
    GridConfig grid;
    holder::HolderParams holder;
    solver::SolverConfig solver;
    solver::ConstantsConfig constants;
    bool radius_search = false;
    solver::RadiusConfig radius;
    ProbeConfig probe;
    std::string output_dir = "out";
    /// The configuration as read, echoed into the manifest.
    json raw;
};

/// Complex scalar from a JSON number or a [re, im] pair.
cplx parse_complex(const json& j, const std::string& where);
json complex_to_json(cplx c);

/// Problem spec from its inline JSON form.
solver::ProblemSpec parse_problem(const json& j);

RunConfig parse_config(const json& j);
/// Reads and parses a config file; throws ConfigError.
RunConfig load_config(const std::string& path);

}  // namespace crsys::cli
