#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "crsys/core/jet.hpp"

namespace crsys::holder {

struct HolderParams {
    double alpha = 0.5;
    /// Pair count above which the seminorm switches to seeded sampling.
    std::size_t pair_budget = 200000;
    /// Node count up to which all pairs are used regardless of the budget.
    std::size_t full_threshold = 640;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

/// Node pairs used for the discrete seminorm, with |z - z'|^{-alpha} cached.
class PairSet {
public:
    PairSet(const core::DiskGrid& grid, const HolderParams& params);

    bool is_full() const { return full_; }
    std::size_t size() const { return first_.size(); }
    const HolderParams& params() const { return params_; }

    /// max over pairs and components of |f(z) - f(z')| / |z - z'|^alpha.
    double seminorm(const core::Field& f) const;

private:
    HolderParams params_;
    bool full_ = false;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> second_;
    std::vector<double> inv_dist_;
};

struct NormReport {
    double sup = 0.0;
    double seminorm = 0.0;
    double norm_alpha = 0.0;
    /// Filled by norm_k: (i, j) -> norm_alpha of d^i dbar^j f.
    std::map<std::pair<int, int>, double> per_derivative;
};

/// max over nodes and components of |f|.
double sup_norm(const core::Field& f);

double holder_seminorm(const core::Field& f, const HolderParams& p);
double holder_seminorm(const core::Field& f, const PairSet& pairs);

/// |f| + (2R)^alpha H_alpha[f].
NormReport norm_alpha(const core::Field& f, const HolderParams& p);
NormReport norm_alpha(const core::Field& f, const PairSet& pairs);

/// max_{i+j=k} of norm_alpha(d^i dbar^j f); k defaults to the jet order.
NormReport norm_k(const core::Jet& jet, const HolderParams& p, int k = -1);
NormReport norm_k(const core::Jet& jet, const PairSet& pairs, int k = -1);

}  // namespace crsys::holder
