#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crsys/solver/problem.hpp"

namespace crsys::solver {

struct ConstantsConfig {
    /// Stand-in for the unspecified constant C of the estimates.
    double generic_C = 1.0;
    /// Low-discrepancy samples in the interior of E(R, gamma) and on its face.
    int n_samples = 4096;
    std::uint64_t seed = 0;
    /// Sampled sups are lower bounds; they are inflated by this factor.
    double safety = 1.1;
    /// Samples used for the pairwise Holder quotients.
    int holder_samples = 1024;

    void validate() const;
};

struct ConstantsEstimate {
    double A = 0.0;
    double H_alpha_A = 0.0;
    double C_of_R_gamma = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double generic_C = 1.0;
    double abs_a0 = 0.0;
    double R = 0.0;
    double gamma = 0.0;
};

/// Samples the Wirtinger derivatives of the right-hand side over
/// E(R, gamma) = {|z| <= R} x prod_p {|eta_p| <= C R^{m-p} gamma} and
/// assembles the Lipschitz bound delta and the magnitude bound eta.
/// Nonzero initial data is shifted into the right-hand side first.
ConstantsEstimate constants_estimate(const ProblemSpec& spec, double R, double gamma, const ConstantsConfig& cfg);

struct RadiusConfig {
    double R_max = 1.0;
    double R_min = 1e-4;
    ConstantsConfig constants;
    /// Cross-check every candidate radius with the empirical probe.
    bool probe = true;
    int n_r = 16;
    int n_theta = 32;
    int bisect_steps = 12;
};

struct RadiusTrial {
    double R = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double probe_delta = 0.0;
    bool admissible = false;
};

struct RadiusResult {
    bool found = false;
    double R = 0.0;
    ConstantsEstimate certificate;
    double probe_delta = 0.0;
    std::vector<RadiusTrial> trail;
    std::string failure;
};

/// Halves R from R_max until delta <= 3/4 and eta <= gamma0/2 (and the probe
/// agrees), then bisects towards the largest admissible radius.
/// Throws InvalidArgument unless gamma0 > 4 C |a(0)|.
RadiusResult radius_search(const ProblemSpec& spec, double gamma0, const RadiusConfig& cfg);

}  // namespace crsys::solver
