#include <cmath>

#include "crsys/core/error.hpp"
#include "crsys/holder/norms.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crsys;
using namespace testing;
using holder::HolderParams;
using holder::PairSet;

namespace {

// All-pairs seminorm, computed without the library's pair cache.
double brute_seminorm(const Field& f, double alpha) {
    const auto& g = f.grid();
    double h = 0.0;
    for (int c = 0; c < f.n_components(); ++c) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                const double d = std::abs(g.node(i) - g.node(j));
                if (d > 0.0) h = std::max(h, std::abs(f(i, c) - f(j, c)) / std::pow(d, alpha));
            }
        }
    }
    return h;
}

}  // namespace

TEST_CASE("sup_norm examples") {
    const auto g1 = core::build_grid(1.0, 8, 16);
    const std::vector<cplx> c = {{3.0, -4.0}};
    CHECK(holder::sup_norm(core::constant_field(g1, c)) == doctest::Approx(5.0));
    CHECK(holder::sup_norm(core::sample(z(), core::build_grid(2.0, 8, 16))) == doctest::Approx(2.0));
    Field v(g1, 2);
    v.assign_component(0, core::sample(z(), g1));
    v.assign_component(1, core::sample(2.0 * zb(), g1));
    CHECK(holder::sup_norm(v) == doctest::Approx(2.0));
}

TEST_CASE("holder_seminorm examples") {
    const auto g = core::build_grid(1.0, 16, 32);
    const PairSet pairs(*g, {0.5});
    REQUIRE(pairs.is_full());
    const std::vector<cplx> c = {{1.0, 2.0}};
    CHECK(holder::holder_seminorm(core::constant_field(g, c), pairs) == 0.0);
    CHECK(holder::holder_seminorm(core::sample(zb(), g), pairs) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    const Field zzb = core::sample(Polynomial::monomial(1, 1), g);
    CHECK(holder::holder_seminorm(zzb, pairs) == doctest::Approx(brute_seminorm(zzb, 0.5)).epsilon(1e-14));
    CHECK(holder::holder_seminorm(zzb, HolderParams{0.5}) == doctest::Approx(brute_seminorm(zzb, 0.5)).epsilon(1e-14));
}

TEST_CASE("seminorm of z^2 against its closed-form maximum") {
    // Maximized on the boundary: (2R)^{2-alpha} max_t sin(t)^{1/2} cos(t) = (2R)^{3/2} 3^{-1/4} (2/3)^{1/2}.
    for (double R : {0.5, 1.0}) {
        const auto g = core::build_grid(R, 16, 32);
        const double exact = std::pow(2 * R, 1.5) * std::pow(3.0, -0.25) * std::sqrt(2.0 / 3.0);
        const double h = holder::holder_seminorm(core::sample(Polynomial::monomial(2, 0), g), HolderParams{0.5});
        CHECK(h <= exact * (1 + 1e-12));
        CHECK(h >= 0.99 * exact);
    }
}

TEST_CASE("norm_alpha examples") {
    for (double R : {0.3, 0.5, 1.0, 2.0}) {
        const auto g = core::build_grid(R, 16, 32);
        for (double alpha : {0.25, 0.5, 0.9}) {
            const PairSet pairs(*g, {alpha});
            CHECK(holder::norm_alpha(core::sample(z(), g), pairs).norm_alpha == doctest::Approx(3 * R).epsilon(1e-12));
            CHECK(holder::norm_alpha(core::sample(zb(), g), pairs).norm_alpha == doctest::Approx(3 * R).epsilon(1e-12));
        }
        const std::vector<cplx> c = {{0.0, -7.0}};
        CHECK(holder::norm_alpha(core::constant_field(g, c), HolderParams{}).norm_alpha == doctest::Approx(7.0));
    }
}

TEST_CASE("norm_k examples") {
    const double R = 0.8;
    const auto g = core::build_grid(R, 12, 24);
    const PairSet pairs(*g, {0.5});
    CHECK(holder::norm_k(core::polynomial_jet(Polynomial::monomial(2, 0), g, 2), pairs).norm_alpha ==
          doctest::Approx(2.0));
    CHECK(holder::norm_k(core::polynomial_jet(Polynomial::monomial(1, 1), g, 2), pairs).norm_alpha ==
          doctest::Approx(1.0));

    const auto rep = holder::norm_k(core::polynomial_jet(Polynomial::monomial(2, 1), g, 1), pairs);
    const auto norm = [&](const Polynomial& p) {
        const Field f = core::sample(p, g);
        return holder::sup_norm(f) + std::pow(2 * R, 0.5) * brute_seminorm(f, 0.5);
    };
    const double d = norm(2.0 * Polynomial::monomial(1, 1));
    const double dbar = norm(Polynomial::monomial(2, 0));
    CHECK(rep.per_derivative.at({1, 0}) == doctest::Approx(d).epsilon(1e-13));
    CHECK(rep.per_derivative.at({0, 1}) == doctest::Approx(dbar).epsilon(1e-13));
    CHECK(rep.norm_alpha == doctest::Approx(std::max(d, dbar)).epsilon(1e-13));
    CHECK(holder::norm_k(core::polynomial_jet(Polynomial::monomial(2, 1), g, 2), pairs, 0).norm_alpha ==
          doctest::Approx(norm(Polynomial::monomial(2, 1))).epsilon(1e-13));
}

TEST_CASE("Banach algebra inequality on full-pair norms") {
    const auto g = core::build_grid(1.0, 8, 16);
    const PairSet pairs(*g, {0.5});
    REQUIRE(pairs.is_full());
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        const Field f = core::sample(random_polynomial(rng, 3), g);
        const Field h = core::sample(random_polynomial(rng, 3), g);
        const double lhs = holder::norm_alpha(core::pointwise_product(f, h), pairs).norm_alpha;
        const double rhs = holder::norm_alpha(f, pairs).norm_alpha * holder::norm_alpha(h, pairs).norm_alpha;
        CHECK(lhs <= rhs * (1 + 1e-14));
    }
}

TEST_CASE("sampled pair sets bound the seminorm from below") {
    const auto g = core::build_grid(1.0, 48, 96);
    HolderParams p{0.5};
    p.pair_budget = 50000;
    const PairSet pairs(*g, p);
    CHECK_FALSE(pairs.is_full());
    CHECK(pairs.size() <= 50000 + 96);
    std::mt19937_64 rng(33);
    const Field f = core::sample(random_polynomial(rng, 3), g);
    const double full = brute_seminorm(f, 0.5);
    const double sampled = pairs.seminorm(f);
    CHECK(sampled <= full * (1 + 1e-14));
    CHECK(sampled >= 0.9 * full);
    // Boundary antipodal pairs are always included, so linear fields are exact.
    CHECK(pairs.seminorm(core::sample(zb(), g)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    HolderParams q = p;
    q.rng_seed = 99;
    const PairSet other(*g, q);
    CHECK(PairSet(*g, p).seminorm(f) == sampled);
    CHECK(other.seminorm(f) <= full * (1 + 1e-14));
}

TEST_CASE("Holder parameters are validated") {
    const auto g = core::build_grid(1.0, 4, 8);
    CHECK_THROWS_AS(PairSet(*g, HolderParams{0.0}), InvalidArgument);
    CHECK_THROWS_AS(PairSet(*g, HolderParams{1.0}), InvalidArgument);
    HolderParams p;
    p.pair_budget = 0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
}
