#pragma once

#include <complex>

namespace coshbar {

using cplx = std::complex<double>;

// Complex-parameter special functions on the real segments this library
// needs. Everything here is pure and reentrant.

/// Principal branch of log Gamma(z). Lanczos sum for Re z >= 1/2, reflection
/// below. Throws PoleError at z = 0, -1, -2, ...
[[nodiscard]] cplx log_gamma(cplx z);

/// 1/Gamma(z); exactly zero at the poles of Gamma.
[[nodiscard]] cplx rgamma(cplx z);

/// True when z is (numerically) one of 0, -1, -2, ...
[[nodiscard]] bool is_nonpositive_integer(cplx z);

/// Value of a hypergeometric evaluation together with an estimate of its
/// absolute rounding error (sum of |terms| times machine epsilon, propagated
/// through any connection formula).
struct Hyp2f1Value {
    cplx value;
    double error = 0.0;
};

/// Gauss hypergeometric function F(a, b; c; z) for real z in [0, 1).
///
/// For z <= 1/2 the Gauss series is summed directly; above that the z -> 1-z
/// connection formula is used, which requires c-a-b to stay away from the
/// integers (DegenerateError within 1e-8). Terminating series (a or b a
/// non-positive integer) are summed directly for any z.
[[nodiscard]] cplx hyp2f1(cplx a, cplx b, cplx c, double z);

/// Same as hyp2f1 but with the complementary argument supplied exactly, so
/// that z close to 1 keeps full relative precision in 1 - z.
[[nodiscard]] Hyp2f1Value hyp2f1_complement(cplx a, cplx b, cplx c, double z, double one_minus_z);

/// Direct Gauss series, no transformation. Valid for 0 <= z < 1.
[[nodiscard]] Hyp2f1Value hyp2f1_series(cplx a, cplx b, cplx c, double z);

/// Two-term z -> 1-z connection formula, evaluated regardless of z.
[[nodiscard]] Hyp2f1Value hyp2f1_connection(cplx a, cplx b, cplx c, double z, double one_minus_z);

/// Ferrers (on-the-cut) associated Legendre function P_nu^mu(x), |x| < 1:
///   P = [(1+x)/(1-x)]^{mu/2} F(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu).
[[nodiscard]] cplx legendre_P(cplx nu, cplx mu, double x);

/// P_nu^mu(tanh(alpha)) evaluated without forming tanh(alpha), which keeps
/// full precision for large |alpha| where 1 -/+ tanh underflows.
[[nodiscard]] Hyp2f1Value legendre_P_tanh(cplx nu, cplx mu, double alpha);

namespace detail {

// log|sin(z)| without overflow for large |Im z|.
[[nodiscard]] double log_abs_sin(cplx z);

// log(sinh(x)) for x > 0 without overflow.
[[nodiscard]] double log_sinh(double x);

// log(cosh(x)) without overflow.
[[nodiscard]] double log_cosh(double x);

// ((1 - tanh a)/2, (1 + tanh a)/2), each with full relative precision.
struct TanhHalves {
    double lower;
    double upper;
};
[[nodiscard]] TanhHalves tanh_halves(double alpha);

}  // namespace detail

}  // namespace coshbar
