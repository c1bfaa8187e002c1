#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "crsys/holder/norms.hpp"
#include "crsys/ops/operators.hpp"
#include "crsys/solver/problem.hpp"

namespace crsys::cli {

/// Outcome of a structural check on a converged solution.
struct OracleResult {
    bool pass = false;
    /// Named measurements; the first one is the headline defect.
    std::vector<std::pair<std::string, double>> metrics;
    std::string detail;
};

using Oracle = std::function<OracleResult(const core::Jet& u, const ops::OperatorWorkspace& ws,
                                          const holder::PairSet& pairs)>;

/// A registered validation problem with known qualitative behavior.
struct CorpusProblem {
    enum class Kind { Solve, Probe };

    std::string name;
    std::string description;
    Kind kind = Kind::Solve;
    std::function<solver::ProblemSpec()> spec;
    double default_R = 0.2;
    int n_r = 16;
    int n_theta = 32;
    /// Applied to converged solutions (Solve problems).
    Oracle oracle;
    /// Probe problems: radii, probe fields in z, and the lower bound on the ratio.
    std::vector<double> probe_radii;
    std::vector<std::string> probe_f;
    std::vector<std::string> probe_g;
    double probe_min = 0.0;
};

const std::vector<CorpusProblem>& corpus();
/// Null when no problem has this name.
const CorpusProblem* find_corpus(const std::string& name);

}  // namespace crsys::cli
