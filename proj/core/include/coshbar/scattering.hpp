#pragma once

#include <complex>
#include <span>
#include <vector>

#include "coshbar/params.hpp"

namespace coshbar {

/// Transmission and reflection data at one wavenumber. `s` is the scattering
/// function T + R (the single-channel combination, not a 2x2 S-matrix).
struct Amplitudes {
    double k = 0.0;
    cplx t{0.0, 0.0};
    cplx r{0.0, 0.0};
    cplx s{0.0, 0.0};
    double t2 = 0.0;
    double r2 = 0.0;

    static Amplitudes from(double k, cplx t, cplx r);

    /// max(| |T|^2 + |R|^2 - 1 |, | |S| - 1 |)
    [[nodiscard]] double unitarity_residual() const;
};

/// Coefficients of P_nu^{-mu}(y) = a P_nu^{mu}(y) + b P_nu^{mu}(-y).
struct ConnectionCoefficients {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
};

/// Energy-normalized scattering states at one position.
struct WaveSample {
    double x = 0.0;
    cplx psi_right{0.0, 0.0};  // incident from the left, P_nu^{i kappa}(+tanh wx)
    cplx psi_left{0.0, 0.0};   // incident from the right, P_nu^{i kappa}(-tanh wx)
};

enum class Direction { right, left };

/// Prefactor convention for the scattering states.
///  - energy: sqrt(m/(2 hbar^2 omega)) sinh^{1/2}(pi kappa) / |sin pi(nu - i kappa) sin pi(nu + i kappa)|^{1/2},
///    which makes the incident wave carry |c|^2 = m/(2 pi hbar^2 k) for every nu;
///  - printed: the same with |sin pi(nu - i kappa)| in the denominator. Identical
///    for real nu (v8 <= 1); for complex nu it misses the energy normalization by
///    the factor |sin pi(nu + i kappa)| / |sin pi(nu - i kappa)|.
enum class Normalization { energy, printed };

/// Closed-form amplitudes,
///   T = G(1+nu-ik) G(-nu-ik) / [G(1-ik) G(-ik)],
///   R = T G(1-ik) G(ik) / [G(1+nu) G(-nu)],
/// with k standing for kappa. All gamma ratios are combined in log space.
/// nu = 0 takes the exact free branch T = 1, R = 0. Throws DomainError for
/// kappa <= 0.
[[nodiscard]] Amplitudes amplitudes(const BarrierIndex& idx, double k);
[[nodiscard]] Amplitudes amplitudes(const BarrierIndex& idx);

/// Alternative closed form of T + R built from Gamma(+-i kappa),
/// Gamma(-nu +- i kappa) and cos(pi/2 (nu +- i kappa)).
[[nodiscard]] cplx s_closed_form(const BarrierIndex& idx);

/// T + R. Throws ConsistencyError when the closed form disagrees by more
/// than 1e-10 relative.
[[nodiscard]] cplx s_function(const BarrierIndex& idx);

/// a = G(nu-mu+1) sin(pi nu) / [G(nu+mu+1) sin(pi(nu+mu))], b likewise with
/// sin(pi mu). Throws DegenerateError if |sin(pi(nu+mu))| < 1e-300.
[[nodiscard]] ConnectionCoefficients connection_coefficients(const BarrierIndex& idx);

/// log of the state prefactor in the chosen convention.
[[nodiscard]] double log_state_normalization(const BarrierIndex& idx, const PhysicalParams& p,
                                             Normalization norm = Normalization::energy);

/// Normalized states at x through the Legendre representation. The
/// hypergeometric representation is evaluated too and a ConsistencyError is
/// raised if the two differ beyond 1e-10 plus their rounding estimates.
[[nodiscard]] WaveSample wavefunctions(const BarrierIndex& idx, const PhysicalParams& p, double x,
                                       Normalization norm = Normalization::energy);

/// Psi_right(x) through the hypergeometric representation only.
[[nodiscard]] cplx wavefunction_hypergeometric(const BarrierIndex& idx, const PhysicalParams& p, double x,
                                               Direction dir, Normalization norm = Normalization::energy);

/// Leading large-|x| form of Psi_right: N T e^{ikx} for x > 0 and
/// N (e^{ikx} + R e^{-ikx}) for x < 0, with the incident amplitude N fixed
/// by the state normalization.
[[nodiscard]] cplx asymptotic_psi_right(const BarrierIndex& idx, const PhysicalParams& p, double x,
                                        Normalization norm = Normalization::energy);

/// Least-squares fit of sampled states to the plane-wave boundary forms.
/// Right: c T e^{ikx} (x > 0), c (e^{ikx} + R e^{-ikx}) (x < 0).
/// Left:  c T e^{-ikx} (x < 0), c (e^{-ikx} + R e^{ikx}) (x > 0).
/// The constant c is fitted, so any consistent normalization works.
/// Requires at least 4 samples with omega|x| >= 8 on each side.
[[nodiscard]] Amplitudes asymptotic_extract(std::span<const WaveSample> samples, const BarrierIndex& idx,
                                            const PhysicalParams& p, Direction dir = Direction::right);

}  // namespace coshbar
