#include <numbers>

#include "crsys/core/error.hpp"
#include "crsys/holder/norms.hpp"
#include "crsys/ops/direct.hpp"
#include "crsys/ops/monomial.hpp"
#include "crsys/ops/operators.hpp"
#include "crsys/ops/workspace.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crsys;
using namespace testing;
using ops::OperatorWorkspace;

namespace {

struct Setup {
    explicit Setup(double R, int n_r = 16, int n_theta = 32) : grid(core::build_grid(R, n_r, n_theta)), ws(grid) {}
    Field f(const Polynomial& p) const { return core::sample(p, grid); }
    core::GridPtr grid;
    OperatorWorkspace ws;
};

const double kTol = 1e-10;

}  // namespace

TEST_CASE("T examples") {
    for (double R : {1.0, 0.5}) {
        Setup s(R);
        CHECK(max_error(ops::op_T(s.f(Polynomial::constant(1.0)), s.ws), zb()) < kTol);
        CHECK(max_error(ops::op_T(s.f(zb()), s.ws), 0.5 * Polynomial::monomial(0, 2)) < kTol);
        const Field Tz = ops::op_T(s.f(z()), s.ws);
        CHECK(max_error(Tz, Polynomial::monomial(1, 1) - Polynomial::constant(R * R)) < kTol);
        CHECK(std::abs(Tz(core::DiskGrid::center) + R * R) < kTol);
    }
}

TEST_CASE("Tbar examples") {
    const double R = 0.8;
    Setup s(R);
    CHECK(max_error(ops::op_Tbar(s.f(Polynomial::constant(1.0)), s.ws), z()) < kTol);
    CHECK(max_error(ops::op_Tbar(s.f(z()), s.ws), 0.5 * Polynomial::monomial(2, 0)) < kTol);
    CHECK(max_error(ops::op_Tbar(s.f(zb()), s.ws), Polynomial::monomial(1, 1) - Polynomial::constant(R * R)) < kTol);
}

TEST_CASE("S and S_b examples") {
    const double R = 0.7;
    Setup s(R);
    CHECK(max_error(ops::op_S(s.f(Polynomial::constant(1.0)), s.ws), Polynomial::constant(1.0)) < kTol);
    CHECK(max_error(ops::op_S(s.f(Polynomial::monomial(2, 0)), s.ws), Polynomial::monomial(2, 0)) < kTol);
    CHECK(max_error(ops::op_S(s.f(zb()), s.ws), Polynomial{}) < kTol);
    CHECK(max_error(ops::op_Sb(s.f(Polynomial::constant(1.0)), s.ws), Polynomial{}) < kTol);
    CHECK(max_error(ops::op_Sb(s.f(z()), s.ws), Polynomial{}) < kTol);
    CHECK(max_error(ops::op_Sb(s.f(Polynomial::monomial(1, 1)), s.ws), Polynomial{}) < kTol);
    // zbar = R^2/z on the circle: S_b(z^3) = -R^2 z on the disk.
    CHECK(max_error(ops::op_Sb(s.f(Polynomial::monomial(3, 0)), s.ws), -R * R * z()) < kTol);
}

TEST_CASE("2T and (k+2)T examples") {
    Setup s(0.6);
    CHECK(max_error(ops::op_T2(s.f(Polynomial::constant(1.0)), s.ws), Polynomial{}) < kTol);
    CHECK(max_error(ops::op_T2(s.f(zb()), s.ws), Polynomial{}) < kTol);
    CHECK(max_error(ops::op_T2(s.f(z()), s.ws), zb()) < kTol);

    const auto jb = core::polynomial_jet(Polynomial::monomial(0, 2), s.grid, 1);
    CHECK(max_error(ops::op_Tk(jb, 1, s.ws), Polynomial{}) < kTol);
    const auto jz = core::polynomial_jet(Polynomial::monomial(2, 0), s.grid, 1);
    CHECK(max_error(ops::op_Tk(jz, 1, s.ws), 2.0 * zb()) < kTol);

    std::mt19937_64 rng(2);
    const Polynomial p = random_polynomial(rng, 4);
    const auto jp = core::polynomial_jet(p, s.grid, 0);
    CHECK(max_error(ops::op_Tk(jp, 0, s.ws), ops::op_T2(s.f(p), s.ws)) == 0.0);
    CHECK_THROWS_AS(ops::op_Tk(jp, 1, s.ws), InvalidArgument);
}

TEST_CASE("compose_T examples") {
    const double R = 0.5;
    Setup s(R);
    std::mt19937_64 rng(4);
    const Field h = s.f(random_polynomial(rng, 3));
    CHECK(max_error(ops::compose_T(h, 0, 0, s.ws), h) == 0.0);

    const Field one = s.f(Polynomial::constant(1.0));
    const Polynomial zzb = Polynomial::monomial(1, 1) - Polynomial::constant(R * R);
    CHECK(max_error(ops::compose_T(one, 1, 1, s.ws), zzb) < kTol);
    CHECK(max_error(ops::compose_T(one, 0, 2, s.ws), 0.5 * Polynomial::monomial(0, 2)) < kTol);

    const auto jet11 = ops::compose_T(core::polynomial_jet(Polynomial::constant(1.0), s.grid, 0), 1, 1, s.ws);
    CHECK(jet11.order() == 2);
    CHECK(max_error(jet11.at(1, 1), Polynomial::constant(1.0)) < kTol);
    const auto jet02 = ops::compose_T(core::polynomial_jet(Polynomial::constant(1.0), s.grid, 0), 0, 2, s.ws);
    CHECK(max_error(jet02.at(0, 2), Polynomial::constant(1.0)) < kTol);
}

TEST_CASE("derivative_of_T examples") {
    Setup s(0.5);
    std::mt19937_64 rng(6);
    const Polynomial p = random_polynomial(rng, 3);
    const auto jp = core::polynomial_jet(p, s.grid, 1);
    CHECK(max_error(ops::derivative_of_T(jp, 0, 1, s.ws), jp.value()) == 0.0);
    const auto jb = core::polynomial_jet(zb(), s.grid, 1);
    CHECK(max_error(ops::derivative_of_T(jb, 1, 0, s.ws), Polynomial{}) < kTol);
    const auto j1 = core::polynomial_jet(Polynomial::constant(1.0), s.grid, 1);
    CHECK(max_error(ops::derivative_of_T(j1, 1, 1, s.ws), Polynomial{}) < kTol);
    CHECK_THROWS_AS(ops::derivative_of_T(j1, 2, 1, s.ws), InvalidArgument);
}

TEST_CASE("closed-form images agree with the residue identities") {
    // Exact polynomial algebra: T dbar f + S f = f and 2T f = T d f - S_b f.
    std::mt19937_64 rng(8);
    for (double R : {0.3, 1.0, 1.7}) {
        for (int k = 0; k < 10; ++k) {
            const Polynomial p = random_polynomial(rng, 5);
            CHECK(p.distance(ops::exact::T(p.derivative(0, 1), R) + ops::exact::S(p, R)) < 1e-12);
            CHECK(p.distance(ops::exact::Tbar(p.derivative(1, 0), R) + ops::exact::Sbar(p, R)) < 1e-12);
            const Polynomial rhs = ops::exact::T(p.derivative(1, 0), R) - ops::exact::Sb(p, R);
            CHECK(ops::exact::T2(p, R).distance(rhs) < 1e-12);
            CHECK(ops::exact::T(p, R).derivative(0, 1).distance(p) < 1e-12);
        }
    }
}

TEST_CASE("closed-form images agree with direct quadrature") {
    const double R = 0.9;
    std::mt19937_64 rng(10);
    for (int k = 0; k < 4; ++k) {
        const Polynomial p = random_polynomial(rng, 4);
        const auto fp = [&](cplx w) { return p(w); };
        const auto jp = [&](int i, int j, cplx w) { return p.derivative(i, j)(w); };
        for (cplx w : {cplx{0.0, 0.0}, cplx{0.3, -0.2}, cplx{-0.5, 0.6}}) {
            CHECK(std::abs(ops::direct::T(fp, w, R) - ops::exact::T(p, R)(w)) < 1e-9);
            CHECK(std::abs(ops::direct::T2(fp, w, R) - ops::exact::T2(p, R)(w)) < 1e-9);
            // f - P_2 is divided by rho^4 near the target, so the direct rule is round-off limited.
            const cplx tk = ops::exact::Tk(p, 2, R)(w);
            CHECK(std::abs(ops::direct::Tk(jp, 2, w, R) - tk) < 1e-6 * (1.0 + std::abs(tk)));
        }
    }
}

TEST_CASE("grid operators match closed forms on random polynomials") {
    const double R = 0.6;
    Setup s(R);
    std::mt19937_64 rng(12);
    for (int k = 0; k < 8; ++k) {
        const Polynomial p = random_polynomial(rng, 5);
        const Field f = s.f(p);
        CHECK(max_error(ops::op_T(f, s.ws), ops::exact::T(p, R)) < kTol);
        CHECK(max_error(ops::op_Tbar(f, s.ws), ops::exact::Tbar(p, R)) < kTol);
        CHECK(max_error(ops::op_S(f, s.ws), ops::exact::S(p, R)) < kTol);
        CHECK(max_error(ops::op_Sbar(f, s.ws), ops::exact::Sbar(p, R)) < kTol);
        CHECK(max_error(ops::op_Sb(f, s.ws), ops::exact::Sb(p, R)) < kTol);
        CHECK(max_error(ops::op_T2(f, s.ws), ops::exact::T2(p, R)) < kTol);
        const auto jet = core::polynomial_jet(p, s.grid, 3);
        for (int order = 0; order <= 3; ++order) {
            CHECK(max_error(ops::op_Tk(jet, order, s.ws), ops::exact::Tk(p, order, R)) < 1e-8);
        }
        for (int l = 0; l <= 2; ++l) {
            CHECK(max_error(ops::op_dSb(f, l, s.ws), ops::exact::Sb(p, R).derivative(l, 0)) < 1e-9);
        }
    }
}

TEST_CASE("grid 2T and (k+2)T match direct quadrature on a non-polynomial") {
    const double R = 0.5;
    Setup s(R, 24, 48);
    const auto f = [](cplx w) { return std::exp(w) * std::conj(w) + std::sin(std::conj(w)); };
    const auto fj = [](int i, int j, cplx w) -> cplx {
        // d^i dbar^j of exp(z) zbar + sin(zbar)
        cplx v = i == 0 && j == 0 ? std::exp(w) * std::conj(w) : (j == 0 ? std::exp(w) * std::conj(w) : 0.0);
        if (j == 1) v = std::exp(w);
        if (i == 0 && j >= 1) v += std::sin(std::conj(w) + j * std::numbers::pi / 2);
        if (i == 0 && j == 0) v += std::sin(std::conj(w));
        return v;
    };
    Field samples(s.grid, 1);
    for (std::size_t n = 0; n < s.grid->size(); ++n) samples(n) = f(s.grid->node(n));
    core::Jet jet(s.grid, 1, 1);
    for (std::size_t n = 0; n < s.grid->size(); ++n) {
        jet.at(0, 0)(n) = fj(0, 0, s.grid->node(n));
        jet.at(1, 0)(n) = fj(1, 0, s.grid->node(n));
        jet.at(0, 1)(n) = fj(0, 1, s.grid->node(n));
    }
    const Field t2 = ops::op_T2(samples, s.ws);
    const Field t3 = ops::op_Tk(jet, 1, s.ws);
    for (std::size_t n : {std::size_t{0}, s.grid->node_index(4, 7), s.grid->node_index(15, 30)}) {
        const cplx w = s.grid->node(n);
        CHECK(std::abs(t2(n) - ops::direct::T2(f, w, R, {512, 64})) < 1e-8);
        CHECK(std::abs(t3(n) - ops::direct::Tk(fj, 1, w, R, {512, 64})) < 1e-7);
    }
}

TEST_CASE("conjugate operators are conj o T o conj") {
    Setup s(0.4);
    std::mt19937_64 rng(14);
    const Field f = s.f(random_polynomial(rng, 4)) + s.f(Polynomial::monomial(1, 1, {0.0, 3.0}));
    CHECK(max_error(ops::op_Tbar(f, s.ws), ops::op_T(f.conj(), s.ws).conj()) < 1e-15);
    CHECK(max_error(ops::op_Sbar(f, s.ws), ops::op_S(f.conj(), s.ws).conj()) < 1e-15);
}

TEST_CASE("apply_T produces the exact jet of T f") {
    const double R = 0.5;
    Setup s(R);
    std::mt19937_64 rng(16);
    for (int k = 0; k < 3; ++k) {
        const Polynomial p = random_polynomial(rng, 3);
        const auto jet = core::polynomial_jet(p, s.grid, 2);
        const auto tj = ops::apply_T(jet, s.ws);
        const auto bj = ops::apply_Tbar(jet, s.ws);
        REQUIRE(tj.order() == 3);
        const Polynomial tp = ops::exact::T(p, R);
        const Polynomial bp = ops::exact::Tbar(p, R);
        for (int o = 0; o <= 3; ++o) {
            for (int j = 0; j <= o; ++j) {
                CHECK(max_error(tj.at(o - j, j), tp.derivative(o - j, j)) < 1e-8);
                CHECK(max_error(bj.at(o - j, j), bp.derivative(o - j, j)) < 1e-8);
            }
        }
    }
}

TEST_CASE("compose_T inverts the Wirtinger operator") {
    const double R = 0.5;
    Setup s(R);
    std::mt19937_64 rng(18);
    const Polynomial h = random_polynomial(rng, 3);
    for (auto [mu, nu] : {std::pair{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 1}}) {
        const auto jet = ops::compose_T(core::polynomial_jet(h, s.grid, 0), mu, nu, s.ws);
        CHECK(jet.order() == mu + nu);
        CHECK(max_error(jet.at(mu, nu), h) < 1e-8);
        CHECK(max_error(jet.value(), ops::exact::compose_T(h, mu, nu, R)) < 1e-10);
    }
}

TEST_CASE("sup bound |Tf| <= 4R |f|") {
    std::mt19937_64 rng(20);
    for (double R : {0.2, 1.0}) {
        Setup s(R);
        for (int k = 0; k < 20; ++k) {
            const Field f = s.f(random_polynomial(rng, 6));
            CHECK(holder::sup_norm(ops::op_T(f, s.ws)) <= 4 * R * holder::sup_norm(f) + 5e-3);
        }
    }
}

TEST_CASE("strongly singular annulus moments vanish") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 0; n <= 3; ++n) {
            CHECK(std::abs(ops::direct::annulus_moment(m, n, {0.1, 0.05}, {0.12, 0.0}, 0.2, 1.0)) < 1e-12);
        }
    }
    CHECK(std::abs(ops::direct::annulus_moment(1, 0, {0.1, 0.05}, {0.12, 0.0}, 0.2, 1.0)) > 0.1);
}

TEST_CASE("workspace geometry") {
    Setup s(1.0, 8, 16);
    CHECK(s.ws.band() == 7);
    double len = 0.0;
    for (double w : s.ws.boundary_weights()) len += w;
    CHECK(len == doctest::Approx(2 * std::numbers::pi));
    CHECK(std::abs(s.ws.twiddle(3, 2) - std::polar(1.0, 3 * 2 * 2 * std::numbers::pi / 16)) < 1e-15);
}

TEST_CASE("operator results do not depend on the thread count") {
    Setup s(0.5);
    std::mt19937_64 rng(22);
    const Field f = s.f(random_polynomial(rng, 5));
    setenv("CRSYS_THREADS", "1", 1);
    const Field a = ops::op_T2(f, s.ws);
    setenv("CRSYS_THREADS", "5", 1);
    const Field b = ops::op_T2(f, s.ws);
    unsetenv("CRSYS_THREADS");
    CHECK(max_error(a, b) == 0.0);
}
