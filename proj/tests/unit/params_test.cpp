#include <doctest.h>

#include <cmath>
#include <limits>

#include "coshbar/error.hpp"
#include "coshbar/params.hpp"
#include "oracles.hpp"

using namespace coshbar;
using coshbar::testing::make_rng;
using coshbar::testing::uniform;

TEST_CASE("reduce: dimensionless groups")
{
    PhysicalParams p{2.0, 0.5, 3.0, 0.7};
    const BarrierIndex idx = reduce(p, 1.5);
    CHECK(idx.kappa == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(idx.v8 == doctest::Approx(8.0 * 2.0 * 0.7 / (0.25 * 9.0)).epsilon(1e-15));
    CHECK(idx.mu == cplx(0.0, idx.kappa));
}

TEST_CASE("reduce: no barrier gives nu = 0")
{
    PhysicalParams p;
    for (double k : {0.0, 0.1, 3.0, 100.0}) CHECK(reduce(p, k).nu == cplx(0.0, 0.0));
}

TEST_CASE("barrier_degree: branch values")
{
    CHECK(barrier_degree(1.0) == cplx(-0.5, 0.0));
    const cplx nu2 = barrier_degree(2.0);
    CHECK(nu2.real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(nu2.imag() == doctest::Approx(0.5).epsilon(1e-15));

    SUBCASE("weak barriers stay real in (-1/2, 0]")
    {
        for (double v8 : {0.0, 1e-12, 0.1, 0.5, 0.999}) {
            const cplx nu = barrier_degree(v8);
            CHECK(nu.imag() == 0.0);
            CHECK(nu.real() <= 0.0);
            CHECK(nu.real() > -0.5);
        }
    }
    SUBCASE("strong barriers sit on Re nu = -1/2 with Im nu > 0")
    {
        for (double v8 : {1.5, 2.0, 20.0, 1e4}) {
            const cplx nu = barrier_degree(v8);
            CHECK(nu.real() == doctest::Approx(-0.5).epsilon(1e-15));
            CHECK(nu.imag() > 0.0);
            CHECK(std::abs(1.0 + std::conj(nu) + nu) < 1e-14);
        }
    }
}

TEST_CASE("barrier_degree: nu (nu + 1) = -v8/4 for random strengths")
{
    auto rng = make_rng(1);
    for (int i = 0; i < 200; ++i) {
        const double v8 = std::pow(10.0, uniform(rng, -6.0, 4.0));
        const cplx nu = barrier_degree(v8);
        CHECK(std::abs(nu * (nu + 1.0) + v8 / 4.0) <= 1e-14 * std::max(1.0, v8 / 4.0));
    }
}

TEST_CASE("reduce depends only on v8 and k/omega")
{
    auto rng = make_rng(2);
    for (int i = 0; i < 50; ++i) {
        const double v8 = uniform(rng, 0.0, 30.0);
        const double kappa = uniform(rng, 0.0, 10.0);
        PhysicalParams a{1.0, 1.0, 1.0, 0.0};
        a.v0 = v0_for_v8(a, v8);
        PhysicalParams b{uniform(rng, 0.1, 5.0), uniform(rng, 0.1, 5.0), uniform(rng, 0.1, 5.0), 0.0};
        b.v0 = v0_for_v8(b, v8);
        const BarrierIndex ia = reduce(a, kappa * a.omega);
        const BarrierIndex ib = reduce(b, kappa * b.omega);
        CHECK(ia.kappa == doctest::Approx(ib.kappa).epsilon(1e-14));
        CHECK(ia.v8 == doctest::Approx(ib.v8).epsilon(1e-13));
        CHECK(std::abs(ia.nu - ib.nu) < 1e-12);
    }
}

TEST_CASE("reduce: rejects bad input")
{
    PhysicalParams p;
    CHECK_THROWS_AS((void)reduce(p, -1.0), DomainError);
    CHECK_THROWS_AS((void)reduce(p, std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS((void)reduce(p, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS((void)reduce(PhysicalParams{0.0, 1.0, 1.0, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS((void)reduce(PhysicalParams{1.0, -1.0, 1.0, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS((void)reduce(PhysicalParams{1.0, 1.0, 0.0, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS((void)reduce(PhysicalParams{1.0, 1.0, 1.0, -0.1}, 1.0), DomainError);
    CHECK_THROWS_AS((void)reduce_dimensionless(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS((void)reduce_dimensionless(1.0, -1.0), DomainError);
}

TEST_CASE("PhysicalParams: energy and potential")
{
    PhysicalParams p{2.0, 3.0, 0.5, 4.0};
    CHECK(p.energy(2.0) == doctest::Approx(9.0 * 4.0 / 4.0));
    CHECK(p.potential(0.0) == doctest::Approx(4.0));
    CHECK(p.potential(2.0) == doctest::Approx(4.0 / std::pow(std::cosh(1.0), 2)));
    CHECK(p.potential(-2.0) == p.potential(2.0));
    CHECK(p.potential(1e4) == 0.0);
}
