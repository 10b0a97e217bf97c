#pragma once

#include <complex>

namespace coshbar {

using cplx = std::complex<double>;

/// Physical description of the barrier V(x) = v0 / cosh^2(omega x) for a
/// particle of mass m. Defaults are the natural units hbar = m = omega = 1.
struct PhysicalParams {
    double m = 1.0;
    double hbar = 1.0;
    double omega = 1.0;
    double v0 = 0.0;

    /// Throws DomainError unless m, hbar, omega > 0, v0 >= 0, all finite.
    void validate() const;

    /// Dimensionless barrier strength 8 m v0 / (hbar^2 omega^2).
    [[nodiscard]] double v8() const;

    /// Kinetic energy hbar^2 k^2 / 2m.
    [[nodiscard]] double energy(double k) const;

    /// Potential at position x.
    [[nodiscard]] double potential(double x) const;
};

/// Dimensionless data that fully determine the scattering problem at one
/// wavenumber: kappa = k/omega, the strength v8, the Legendre degree nu and
/// the order mu = i kappa.
struct BarrierIndex {
    double kappa = 0.0;
    double v8 = 0.0;
    cplx nu{0.0, 0.0};
    cplx mu{0.0, 0.0};

    friend bool operator==(const BarrierIndex&, const BarrierIndex&) = default;
};

/// Legendre degree nu = (-1 + sqrt(1 - v8)) / 2 on the principal branch.
/// Real in (-1/2, 0] for v8 <= 1, and -1/2 + i*lambda with lambda > 0 above.
[[nodiscard]] cplx barrier_degree(double v8);

/// Index from dimensionless inputs; throws DomainError for v8 < 0 or
/// kappa < 0 or non-finite values.
[[nodiscard]] BarrierIndex reduce_dimensionless(double v8, double kappa);

/// Index for physical parameters at wavenumber k >= 0.
[[nodiscard]] BarrierIndex reduce(const PhysicalParams& p, double k);

/// Barrier strength v0 that produces a given v8 for the other parameters of p.
[[nodiscard]] double v0_for_v8(const PhysicalParams& p, double v8);

}  // namespace coshbar
