#include "coshbar/params.hpp"

#include <cmath>
#include <string>

#include "coshbar/error.hpp"

namespace coshbar {

void PhysicalParams::validate() const
{
    if (!std::isfinite(m) || !std::isfinite(hbar) || !std::isfinite(omega) || !std::isfinite(v0))
        throw DomainError("physical parameters must be finite");
    if (m <= 0.0) throw DomainError("mass must be positive");
    if (hbar <= 0.0) throw DomainError("hbar must be positive");
    if (omega <= 0.0) throw DomainError("omega must be positive");
    if (v0 < 0.0) throw DomainError("v0 must be non-negative (attractive wells are not supported)");
}

double PhysicalParams::v8() const
{
    return 8.0 * m * v0 / (hbar * hbar * omega * omega);
}

double PhysicalParams::energy(double k) const
{
    return hbar * hbar * k * k / (2.0 * m);
}

double PhysicalParams::potential(double x) const
{
    const double c = std::cosh(omega * x);
    return v0 / (c * c);
}

cplx barrier_degree(double v8)
{
    // sqrt of a negative real on the principal branch is +i*sqrt(|.|)
    const cplx root = std::sqrt(cplx(1.0 - v8, 0.0));
    return (root - 1.0) * 0.5;
}

BarrierIndex reduce_dimensionless(double v8, double kappa)
{
    if (!std::isfinite(v8) || !std::isfinite(kappa))
        throw DomainError("reduce: non-finite input");
    if (v8 < 0.0) throw DomainError("reduce: v8 must be non-negative");
    if (kappa < 0.0) throw DomainError("reduce: wavenumber must be non-negative");

    BarrierIndex idx;
    idx.kappa = kappa;
    idx.v8 = v8;
    idx.nu = barrier_degree(v8);
    idx.mu = cplx(0.0, kappa);
    return idx;
}

BarrierIndex reduce(const PhysicalParams& p, double k)
{
    p.validate();
    if (!std::isfinite(k)) throw DomainError("reduce: non-finite wavenumber");
    if (k < 0.0) throw DomainError("reduce: wavenumber must be non-negative");
    return reduce_dimensionless(p.v8(), k / p.omega);
}

double v0_for_v8(const PhysicalParams& p, double v8)
{
    return v8 * p.hbar * p.hbar * p.omega * p.omega / (8.0 * p.m);
}

}  // namespace coshbar
