#include "crsys/holder/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "crsys/core/error.hpp"
#include "crsys/core/parallel.hpp"

namespace crsys::holder {

void HolderParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("HolderParams: alpha must lie in (0, 1)");
    if (pair_budget < 1) throw InvalidArgument("HolderParams: pair_budget must be positive");
}

PairSet::PairSet(const core::DiskGrid& grid, const HolderParams& params) : params_(params) {
    params_.validate();
    const std::size_t n = grid.size();
    if (n < 2) throw InvalidArgument("PairSet: grid needs at least two nodes");
    const std::size_t all = n * (n - 1) / 2;
    full_ = n <= params_.full_threshold || all <= params_.pair_budget;

    auto push = [&](std::size_t i, std::size_t j) {
        first_.push_back(static_cast<std::uint32_t>(i));
        second_.push_back(static_cast<std::uint32_t>(j));
    };
    if (full_) {
        first_.reserve(all);
        second_.reserve(all);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) push(i, j);
        }
    } else {
        std::mt19937_64 rng(params_.rng_seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        while (first_.size() < params_.pair_budget) {
            const std::size_t i = pick(rng);
            const std::size_t j = pick(rng);
            if (i != j) push(i, j);
        }
        // Diameter pairs carry the largest quotients for smooth fields.
        const int nt = grid.n_theta();
        for (int k = 0; k < nt / 2; ++k) push(grid.boundary_node(k), grid.boundary_node(k + nt / 2));
    }

    inv_dist_.resize(first_.size());
    for (std::size_t p = 0; p < first_.size(); ++p) {
        inv_dist_[p] = std::pow(std::abs(grid.node(first_[p]) - grid.node(second_[p])), -params_.alpha);
    }
}

double PairSet::seminorm(const core::Field& f) const {
    const std::size_t chunk = 8192;
    const std::size_t n_chunks = (size() + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, 0.0);
    core::parallel_for(n_chunks, [&](std::size_t b) {
        const std::size_t lo = b * chunk;
        const std::size_t hi = std::min(size(), lo + chunk);
        double best = 0.0;
        for (int c = 0; c < f.n_components(); ++c) {
            const auto v = f.component(c);
            for (std::size_t p = lo; p < hi; ++p) {
                best = std::max(best, std::abs(v[first_[p]] - v[second_[p]]) * inv_dist_[p]);
            }
        }
        partial[b] = best;
    });
    double best = 0.0;
    for (double x : partial) best = std::max(best, x);
    return best;
}

double sup_norm(const core::Field& f) {
    double best = 0.0;
    for (const core::cplx v : f.values()) best = std::max(best, std::abs(v));
    return best;
}

double holder_seminorm(const core::Field& f, const HolderParams& p) { return PairSet(f.grid(), p).seminorm(f); }
double holder_seminorm(const core::Field& f, const PairSet& pairs) { return pairs.seminorm(f); }

NormReport norm_alpha(const core::Field& f, const PairSet& pairs) {
    NormReport r;
    r.sup = sup_norm(f);
    r.seminorm = pairs.seminorm(f);
    r.norm_alpha = r.sup + std::pow(2.0 * f.grid().radius(), pairs.params().alpha) * r.seminorm;
    return r;
}

NormReport norm_alpha(const core::Field& f, const HolderParams& p) { return norm_alpha(f, PairSet(f.grid(), p)); }

NormReport norm_k(const core::Jet& jet, const PairSet& pairs, int k) {
    if (k < 0) k = jet.order();
    if (k > jet.order()) {
        throw InvalidArgument("norm_k: order " + std::to_string(k) + " exceeds jet order " +
                              std::to_string(jet.order()));
    }
    NormReport out;
    for (int j = 0; j <= k; ++j) {
        const NormReport r = norm_alpha(jet.at(k - j, j), pairs);
        out.per_derivative[{k - j, j}] = r.norm_alpha;
        if (r.norm_alpha >= out.norm_alpha) {
            out.sup = r.sup;
            out.seminorm = r.seminorm;
            out.norm_alpha = r.norm_alpha;
        }
    }
    return out;
}

NormReport norm_k(const core::Jet& jet, const HolderParams& p, int k) {
    return norm_k(jet, PairSet(jet.grid(), p), k);
}

}  // namespace crsys::holder
