#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coshbar/params.hpp"
#include "coshbar/scattering.hpp"

namespace coshbar {

// Numerical ground truth that never touches the special-function code:
// direct integration of the stationary equation for T/R, and a
// finite-difference Hamiltonian for the Euclidean propagator.

/// How the free plane waves at the box edges are represented.
///  - discrete: e^{+-iqx} with q the exact Numerov dispersion for the free
///    equation, so free propagation between the edges carries no phase error;
///  - continuum: e^{+-ikx}, the textbook choice, error O(h^4) per unit length.
enum class BoundaryModel { discrete, continuum };

struct SolverConfig {
    double box_half_width = 0.0;  // L; <= 0 selects the default box
    double step = 0.0;            // h; <= 0 selects the default step
    double match_tolerance = 1e-4;
    double potential_smallness = 1e-16;  // max V(L)/E accepted at the box edge
    BoundaryModel boundary = BoundaryModel::discrete;
    bool extrapolate = true;  // Richardson-combine the h and h/2 solutions
};

/// L = max(10/omega, 10/k, L_v) with V(L_v)/E = potential_smallness.
[[nodiscard]] double default_box_half_width(const PhysicalParams& p, double k, const SolverConfig& cfg);

/// h = min(2 pi/(40 k), 1/(40 omega)): 40 points per wavelength and per barrier width.
[[nodiscard]] double default_step(const PhysicalParams& p, double k);

/// One Numerov solve on [-L, L] with `steps` intervals. The purely
/// transmitted wave is seeded at +L, integrated to -L and matched at the two
/// leftmost abscissae to A e^{iqx} + B e^{-iqx}; T = 1/A, R = B/A.
[[nodiscard]] Amplitudes numerov_solve(const PhysicalParams& p, double k, double half_width, std::size_t steps,
                                       BoundaryModel boundary = BoundaryModel::discrete);

/// Numerov solves at h and h/2. Throws ConvergenceError ("step too coarse")
/// when |dT| or |dR| between them exceeds cfg.match_tolerance; returns the
/// Richardson combination (16 X_{h/2} - X_h)/15 unless disabled.
[[nodiscard]] Amplitudes numerov_amplitudes(const PhysicalParams& p, double k, const SolverConfig& cfg = {});

/// Dense diagonalization of the second-order finite-difference Hamiltonian
/// on N interior points of [-L, L] with Dirichlet walls.
class GridHamiltonian {
public:
    GridHamiltonian(const PhysicalParams& p, double half_width, std::size_t points);

    /// sum_n exp(-E_n tau/hbar) phi_n(xf) phi_n(xi), eigenvectors interpolated
    /// between nodes with 4-point Lagrange weights.
    [[nodiscard]] double kernel(double tau, double xf, double xi) const;

    [[nodiscard]] std::span<const double> energies() const { return energies_; }
    [[nodiscard]] std::size_t size() const { return points_; }
    [[nodiscard]] double spacing() const { return spacing_; }
    [[nodiscard]] double half_width() const { return half_width_; }

    /// max_n ||H phi_n - E_n phi_n||
    [[nodiscard]] double max_residual() const;

private:
    struct Stencil {
        std::size_t first = 0;
        std::size_t count = 0;
        double weights[4] = {0.0, 0.0, 0.0, 0.0};
    };
    [[nodiscard]] Stencil stencil(double x) const;
    [[nodiscard]] double mode_value(const Stencil& s, std::size_t n) const;

    PhysicalParams params_;
    double half_width_;
    std::size_t points_;
    double spacing_;
    std::vector<double> diagonal_;
    double offdiagonal_;
    std::vector<double> energies_;
    std::vector<double> modes_;  // column-major, points_ x points_
};

/// Grid propagator with its refinement check: grids of N and 2N+1 points
/// (spacing halved). Kernel values that change by more than
/// `convergence_tolerance` (relative) throw ConvergenceError; otherwise the
/// second-order Richardson value (4 K_fine - K_coarse)/3 is returned.
/// The eigendecompositions are built once and reused for every query.
class GridPropagator {
public:
    GridPropagator(const PhysicalParams& p, double half_width, std::size_t points,
                   double convergence_tolerance = 1e-4);

    struct Value {
        double value;
        double coarse;
        double fine;
    };

    [[nodiscard]] Value evaluate(double tau, double xf, double xi) const;
    [[nodiscard]] double operator()(double tau, double xf, double xi) const { return evaluate(tau, xf, xi).value; }

    [[nodiscard]] const GridHamiltonian& coarse() const { return coarse_; }
    [[nodiscard]] const GridHamiltonian& fine() const { return fine_; }

private:
    GridHamiltonian coarse_;
    GridHamiltonian fine_;
    double tolerance_;
};

/// One-shot form of GridPropagator. Requires N >= 200, tau > 0, |xf|, |xi| < L.
[[nodiscard]] double grid_propagator(const PhysicalParams& p, double half_width, std::size_t points, double tau,
                                     double xf, double xi);

/// Box large enough that the Dirichlet walls are invisible at (tau, xf, xi):
/// max(|xf|, |xi|) + 9 sqrt(hbar tau / m), at least 4/omega.
[[nodiscard]] double default_grid_half_width(const PhysicalParams& p, double tau, double xf, double xi);

}  // namespace coshbar
