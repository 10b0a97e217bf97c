#include <doctest.h>

#include <cmath>

#include "coshbar/error.hpp"
#include "coshbar/oracle.hpp"
#include "coshbar/params.hpp"
#include "coshbar/propagator.hpp"
#include "coshbar/scattering.hpp"
#include "oracles.hpp"

using namespace coshbar;
using coshbar::testing::rel;

namespace {

PhysicalParams unit(double v8)
{
    PhysicalParams p;
    p.v0 = v8 / 8.0;
    return p;
}

double phase_gap(cplx a, cplx b)
{
    return std::abs(std::arg(a / b));
}

}  // namespace

TEST_CASE("numerov: free particle passes straight through")
{
    const PhysicalParams p;
    for (double k : {0.3, 1.0, 4.0}) {
        const Amplitudes a = numerov_amplitudes(p, k);
        CHECK(std::abs(a.t - 1.0) < 1e-10);
        CHECK(std::abs(a.r) < 1e-10);
    }
}

TEST_CASE("numerov: matches the closed form in modulus and phase")
{
    for (const auto& [v8, kappa] : {std::pair{0.1, 0.1}, {2.0, 1.0}, {20.0, 0.5}, {5.0, 5.0}, {1.0, 2.0}}) {
        CAPTURE(v8);
        CAPTURE(kappa);
        const PhysicalParams p = unit(v8);
        const Amplitudes num = numerov_amplitudes(p, kappa);
        const Amplitudes ref = amplitudes(reduce(p, kappa), kappa);
        CHECK(std::abs(std::abs(num.t) - std::abs(ref.t)) / std::abs(ref.t) < 1e-6);
        CHECK(std::abs(std::abs(num.r) - std::abs(ref.r)) / std::abs(ref.r) < 1e-6);
        CHECK(phase_gap(num.t, ref.t) < 1e-6);
        CHECK(phase_gap(num.r, ref.r) < 1e-6);
    }
}

TEST_CASE("numerov: agrees with an RK4 integration")
{
    const PhysicalParams p = unit(2.0);
    const Amplitudes num = numerov_amplitudes(p, 1.0);
    const auto rk = coshbar::testing::rk4_amplitudes(2.0, 1.0);
    CHECK(rel(num.t, rk.t) < 1e-7);
    CHECK(rel(num.r, rk.r) < 1e-7);
}

TEST_CASE("numerov: fourth-order convergence with the continuum boundary")
{
    const PhysicalParams p = unit(2.0);
    const double k = 1.0;
    const Amplitudes ref = amplitudes(reduce(p, k), k);
    SolverConfig cfg;
    const double L = default_box_half_width(p, k, cfg);
    const auto err = [&](std::size_t n) {
        return std::abs(numerov_solve(p, k, L, n, BoundaryModel::continuum).t - ref.t);
    };
    const std::size_t n = 2000;
    const double order = std::log2(err(n) / err(2 * n));
    CHECK(order > 3.8);
    CHECK(order < 4.2);
}

TEST_CASE("numerov: raw solves conserve flux")
{
    const PhysicalParams p = unit(5.0);
    const double L = default_box_half_width(p, 0.7, {});
    const Amplitudes a = numerov_solve(p, 0.7, L, 3000);
    CHECK(std::abs(a.t2 + a.r2 - 1.0) < 1e-8);
}

TEST_CASE("numerov: narrow barrier approaches the delta limit")
{
    // hbar = 1, m = 1/2, barrier area fixed at g = 2
    const double omega = 200.0, g = 2.0, k = 1.0;
    const PhysicalParams p{0.5, 1.0, omega, g * omega / 2.0};
    const Amplitudes num = numerov_amplitudes(p, k);
    CHECK(rel(num.t, amplitudes(reduce(p, k), k).t) < 1e-6);
    CHECK(std::abs(num.t - 2.0 * k / cplx(2.0 * k, g)) < 10.0 / omega);
}

TEST_CASE("numerov: configuration errors")
{
    const PhysicalParams p = unit(2.0);
    SolverConfig tiny_box;
    tiny_box.box_half_width = 2.0;
    CHECK_THROWS_AS((void)numerov_amplitudes(p, 1.0, tiny_box), DomainError);

    SolverConfig coarse;
    coarse.step = 0.5;
    coarse.match_tolerance = 1e-9;
    CHECK_THROWS_AS((void)numerov_amplitudes(p, 1.0, coarse), ConvergenceError);
    CHECK_THROWS_AS((void)numerov_amplitudes(p, 0.0), DomainError);
}

TEST_CASE("grid: free kernel and basic properties")
{
    const PhysicalParams free;
    const GridPropagator grid(free, default_grid_half_width(free, 1.0, 0.5, 0.5), 600);
    for (double xf : {-0.5, 0.0, 0.5})
        for (double xi : {-0.5, 0.0, 0.5}) {
            const double ref = free_kernel(free, xf, xi, 1.0);
            CHECK(std::abs(grid(1.0, xf, xi) - ref) / ref < 1e-4);
        }

    const PhysicalParams p = unit(2.0);
    const GridPropagator barrier(p, default_grid_half_width(p, 1.0, 0.8, 0.8), 600);
    CHECK(barrier(1.0, 0.3, -0.7) == doctest::Approx(barrier(1.0, -0.7, 0.3)).epsilon(1e-12));
    CHECK(barrier(1.0, 0.3, -0.7) == doctest::Approx(barrier(1.0, -0.3, 0.7)).epsilon(1e-10));
    for (double x : {-0.8, 0.0, 0.4}) CHECK(barrier(1.0, x, 0.1) > 0.0);
    CHECK(barrier.coarse().max_residual() < 1e-10);
    CHECK(barrier.fine().size() == 2 * 600 + 1);
}

TEST_CASE("grid: rejects bad input")
{
    const PhysicalParams p;
    CHECK_THROWS((void)GridHamiltonian(p, 5.0, 100));
    CHECK_THROWS((void)grid_propagator(p, 5.0, 300, 1.0, 6.0, 0.0));
    CHECK_THROWS((void)grid_propagator(p, 5.0, 300, -1.0, 0.0, 0.0));
}
