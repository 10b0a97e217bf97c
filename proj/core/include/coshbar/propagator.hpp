#pragma once

#include <array>
#include <cstddef>

#include "coshbar/params.hpp"
#include "coshbar/scattering.hpp"

namespace coshbar {

/// Euclidean kernel <xf| exp(-H tau/hbar) |xi> with its quadrature error.
struct KernelValue {
    double xf = 0.0;
    double xi = 0.0;
    double tau = 0.0;
    double value = 0.0;
    double quad_error = 0.0;  // absolute
    double imag_part = 0.0;   // residual imaginary part of the assembled integral
};

struct SpectralConfig {
    double rel_tolerance = 1e-11;
    double kmin_factor = 1e-6;  // k_min = kmin_factor * omega
    double max_kappa = 200.0;   // beyond this the state products leave double range
    int max_depth = 30;
    int initial_panels = 16;
    Normalization normalization = Normalization::energy;
};

/// sqrt(m / (2 pi hbar tau)) exp(-m (xf - xi)^2 / (2 hbar tau)).
[[nodiscard]] double free_kernel(const PhysicalParams& p, double xf, double xi, double tau);

/// Integrand in k of the spectral representation,
///   (kappa/2) sinh(pi kappa) / D * [P(yf) P*(yi) + P(-yf) P*(-yi)] * exp(-hbar k^2 tau / 2m),
/// with P = P_nu^{i kappa}, y = tanh(omega x) and D = |sin pi(nu - i kappa) sin pi(nu + i kappa)|
/// (energy) or |sin pi(nu - i kappa)|^2 (printed). Real for every k up to
/// rounding; the complex value is returned so callers can monitor the imaginary part.
[[nodiscard]] cplx spectral_integrand(const PhysicalParams& p, double k, double xf, double xi, double tau,
                                      Normalization norm = Normalization::energy);

/// Upper wavenumber where exp(-hbar k^2 tau / 2m) drops below 1e-16.
[[nodiscard]] double spectral_cutoff(const PhysicalParams& p, double tau);

/// Kernel from the scattering states: adaptive 20-point Gauss-Legendre panels
/// on [k_min, k_max] plus a first-order estimate of the omitted [0, k_min]
/// piece. Throws DomainError when tau <= 0 or when k_max exceeds
/// cfg.max_kappa * omega, ConvergenceError when a panel cannot reach the
/// tolerance within cfg.max_depth bisections, and ConsistencyError when the
/// imaginary part exceeds 1e-10 of the value beyond the rounding floor.
[[nodiscard]] KernelValue spectral_kernel(const PhysicalParams& p, double xf, double xi, double tau,
                                          const SpectralConfig& cfg = {});

namespace detail {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    static constexpr std::size_t order = 20;
    std::array<double, order> nodes;
    std::array<double, order> weights;
};
[[nodiscard]] const GaussRule& gauss_legendre_20();

}  // namespace detail

}  // namespace coshbar
