#include "coshbar/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "coshbar/error.hpp"

namespace coshbar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLogPi = std::log(kPi);
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// Godfrey's coefficient set, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr int kMaxSeriesTerms = 10000;
constexpr double kSeriesStop = 1e-16;
constexpr double kDegenerateGap = 1e-8;

// Requires Re z >= 1/2.
cplx lanczos_log_gamma(cplx z)
{
    z -= 1.0;
    cplx sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        sum += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + (kLanczosG + 0.5);
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) on the principal branch, overflow-free for large |Im z|.
cplx log_sin_pi(cplx z)
{
    const double y = z.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(kPi * z));
    // sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z}) / (2i) for y > 0, mirrored below
    const cplx i{0.0, 1.0};
    cplx value;
    if (y > 0.0)
        value = -i * kPi * z - std::log(cplx(0.0, -2.0)) + std::log(1.0 - std::exp(2.0 * i * kPi * z));
    else
        value = i * kPi * z - std::log(cplx(0.0, 2.0)) + std::log(1.0 - std::exp(-2.0 * i * kPi * z));
    // fold the imaginary part back to (-pi, pi]
    const double im = std::remainder(value.imag(), 2.0 * kPi);
    return {value.real(), im};
}

Hyp2f1Value scale(const Hyp2f1Value& f, cplx factor, double factor_rel_error)
{
    const cplx v = factor * f.value;
    return {v, std::abs(factor) * f.error + factor_rel_error * std::abs(v)};
}

void check_hyp_args(cplx c, double z, double one_minus_z)
{
    if (!std::isfinite(z) || !std::isfinite(one_minus_z))
        throw DomainError("hyp2f1: non-finite argument");
    // z may round to 1 when the caller supplies 1 - z exactly
    if (z < 0.0 || z > 1.0 || one_minus_z <= 0.0)
        throw DomainError("hyp2f1: argument outside [0, 1)");
    if (is_nonpositive_integer(c))
        throw DomainError("hyp2f1: c is a non-positive integer");
}

}  // namespace

namespace detail {

double log_abs_sin(cplx z)
{
    const double x = z.real();
    const double y = std::abs(z.imag());
    if (y < 1.0) {
        const double s = std::sin(x);
        const double sh = std::sinh(y);
        return 0.5 * std::log(s * s + sh * sh);
    }
    const double e = std::exp(-2.0 * y);
    return 0.5 * (2.0 * y - std::log(4.0) + std::log1p(e * e - 2.0 * std::cos(2.0 * x) * e));
}

double log_sinh(double x)
{
    if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

double log_cosh(double x)
{
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

TanhHalves tanh_halves(double alpha)
{
    // (1 - tanh a)/2 = 1/(1 + e^{2a})
    if (alpha >= 0.0) {
        const double e = std::exp(-2.0 * alpha);
        return {e / (1.0 + e), 1.0 / (1.0 + e)};
    }
    const double e = std::exp(2.0 * alpha);
    return {1.0 / (1.0 + e), e / (1.0 + e)};
}

}  // namespace detail

bool is_nonpositive_integer(cplx z)
{
    if (z.imag() != 0.0 || z.real() > 0.0) return false;
    return z.real() == std::round(z.real());
}

cplx log_gamma(cplx z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");

    if (z.real() >= 0.5) return lanczos_log_gamma(z);

    const cplx reflected = lanczos_log_gamma(1.0 - z);
    if (z.imag() == 0.0) {
        // Negative real axis: Gamma alternates sign between poles; the
        // principal branch carries -i*pi per pole crossed.
        const double x = z.real();
        const double log_abs = kLogPi - std::log(std::abs(std::sin(kPi * x))) - reflected.real();
        const double im = x < 0.0 ? -kPi * std::ceil(-x) : 0.0;
        return {log_abs, im};
    }
    const double sign = z.imag() > 0.0 ? 1.0 : -1.0;
    const double branch = 2.0 * kPi * sign * std::floor(0.5 * z.real() + 0.25);
    return cplx(kLogPi, branch) - log_sin_pi(z) - reflected;
}

cplx rgamma(cplx z)
{
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

Hyp2f1Value hyp2f1_series(cplx a, cplx b, cplx c, double z)
{
    // a polynomial is fine at z = 1
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    check_hyp_args(c, z, terminating ? 1.0 : 1.0 - z);
    if (z == 0.0) return {cplx(1.0, 0.0), 0.0};

    cplx term{1.0, 0.0};
    cplx sum{1.0, 0.0};
    double abs_sum = 1.0;
    int small_run = 0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        const double mag = std::abs(term);
        abs_sum += mag;
        if (mag == 0.0) return {sum, 4.0 * kEps * abs_sum};
        // two consecutive negligible terms in the convergent tail
        const double ratio = std::abs((a + dn + 1.0) * (b + dn + 1.0) / ((c + dn + 1.0) * (dn + 2.0))) * z;
        if (mag <= kSeriesStop * std::abs(sum) && ratio < 1.0) {
            if (++small_run >= 2) return {sum, 4.0 * kEps * abs_sum};
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("hyp2f1: Gauss series did not converge within 10000 terms");
}

Hyp2f1Value hyp2f1_connection(cplx a, cplx b, cplx c, double z, double one_minus_z)
{
    check_hyp_args(c, z, one_minus_z);
    const cplx d = c - a - b;
    const cplx nearest(std::round(d.real()), 0.0);
    if (std::abs(d - nearest) < kDegenerateGap)
        throw DegenerateError("hyp2f1: c-a-b is (nearly) an integer; 1-z connection formula is singular");

    const cplx lg_c = log_gamma(c);

    Hyp2f1Value first{cplx(0.0, 0.0), 0.0};
    if (!is_nonpositive_integer(c - a) && !is_nonpositive_integer(c - b)) {
        const cplx lg_d = log_gamma(d);
        const cplx lg_ca = log_gamma(c - a);
        const cplx lg_cb = log_gamma(c - b);
        const cplx log_pref = lg_c + lg_d - lg_ca - lg_cb;
        const double pref_err =
            4.0 * kEps * (std::abs(lg_c) + std::abs(lg_d) + std::abs(lg_ca) + std::abs(lg_cb));
        first = scale(hyp2f1_series(a, b, 1.0 - d, one_minus_z), std::exp(log_pref), pref_err);
    }

    Hyp2f1Value second{cplx(0.0, 0.0), 0.0};
    if (!is_nonpositive_integer(a) && !is_nonpositive_integer(b)) {
        const cplx lg_md = log_gamma(-d);
        const cplx lg_a = log_gamma(a);
        const cplx lg_b = log_gamma(b);
        const cplx log_pref = lg_c + lg_md - lg_a - lg_b + d * std::log(one_minus_z);
        const double pref_err = 4.0 * kEps *
            (std::abs(lg_c) + std::abs(lg_md) + std::abs(lg_a) + std::abs(lg_b) +
             std::abs(d * std::log(one_minus_z)));
        second = scale(hyp2f1_series(c - a, c - b, 1.0 + d, one_minus_z), std::exp(log_pref), pref_err);
    }

    return {first.value + second.value, first.error + second.error};
}

Hyp2f1Value hyp2f1_complement(cplx a, cplx b, cplx c, double z, double one_minus_z)
{
    check_hyp_args(c, z, one_minus_z);
    if (z == 0.0) return {cplx(1.0, 0.0), 0.0};
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || z <= 0.5)
        return hyp2f1_series(a, b, c, z);
    return hyp2f1_connection(a, b, c, z, one_minus_z);
}

cplx hyp2f1(cplx a, cplx b, cplx c, double z)
{
    return hyp2f1_complement(a, b, c, z, 1.0 - z).value;
}

cplx legendre_P(cplx nu, cplx mu, double x)
{
    if (!std::isfinite(x) || std::abs(x) >= 1.0)
        throw DomainError("legendre_P: argument must lie in (-1, 1)");
    if (is_nonpositive_integer(1.0 - mu))
        throw DomainError("legendre_P: 1 - mu is a non-positive integer");

    const double log_ratio = std::log1p(x) - std::log1p(-x);
    const cplx log_pref = -log_gamma(1.0 - mu) + 0.5 * mu * log_ratio;
    const auto f = hyp2f1_complement(-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - x), 0.5 * (1.0 + x));
    return std::exp(log_pref) * f.value;
}

Hyp2f1Value legendre_P_tanh(cplx nu, cplx mu, double alpha)
{
    if (!std::isfinite(alpha)) throw DomainError("legendre_P_tanh: non-finite argument");
    if (is_nonpositive_integer(1.0 - mu))
        throw DomainError("legendre_P_tanh: 1 - mu is a non-positive integer");

    const auto [z, zc] = detail::tanh_halves(alpha);
    if (zc <= 0.0 || z <= 0.0) throw DomainError("legendre_P_tanh: |alpha| too large for double precision");

    const cplx lg = log_gamma(1.0 - mu);
    const cplx log_pref = -lg + mu * alpha;
    const auto f = hyp2f1_complement(-nu, nu + 1.0, 1.0 - mu, z, zc);
    const double pref_err = 4.0 * kEps * (std::abs(lg) + std::abs(mu * alpha));
    return scale(f, std::exp(log_pref), pref_err);
}

}  // namespace coshbar
