#include "coshbar/scattering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "coshbar/error.hpp"
#include "coshbar/special.hpp"

namespace coshbar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRouteTolerance = 1e-10;
constexpr double kMinAsymptoticArgument = 8.0;
constexpr int kMinSamplesPerSide = 4;

void require_positive_kappa(const BarrierIndex& idx, const char* where)
{
    if (!(idx.kappa > 0.0) || !std::isfinite(idx.kappa))
        throw DomainError(std::string(where) + ": requires kappa > 0 (zero-energy limit is T = 0, |R| = 1)");
}

bool is_free(const BarrierIndex& idx)
{
    return idx.nu == cplx(0.0, 0.0);
}

// Unnormalized state P_nu^{i kappa}(tanh arg) written as
// [(1 - tanh^2)/4]^{-i kappa/2} F(1+nu-ik, -nu-ik; 1-ik; (1 - tanh)/2) / Gamma(1-ik).
Hyp2f1Value hypergeometric_state(const BarrierIndex& idx, double arg)
{
    const cplx ik(0.0, idx.kappa);
    const auto [z, zc] = detail::tanh_halves(arg);
    const cplx log_pref = -log_gamma(1.0 - ik) + ik * (std::numbers::ln2 + detail::log_cosh(arg));
    const auto f = hyp2f1_complement(1.0 + idx.nu - ik, -idx.nu - ik, 1.0 - ik, z, zc);
    const cplx pref = std::exp(log_pref);
    return {pref * f.value, std::abs(pref) * f.error};
}

}  // namespace

Amplitudes Amplitudes::from(double k, cplx t, cplx r)
{
    Amplitudes a;
    a.k = k;
    a.t = t;
    a.r = r;
    a.s = t + r;
    a.t2 = std::norm(t);
    a.r2 = std::norm(r);
    return a;
}

double Amplitudes::unitarity_residual() const
{
    return std::max(std::abs(t2 + r2 - 1.0), std::abs(std::abs(s) - 1.0));
}

Amplitudes amplitudes(const BarrierIndex& idx, double k)
{
    require_positive_kappa(idx, "amplitudes");
    if (is_free(idx)) return Amplitudes::from(k, cplx(1.0, 0.0), cplx(0.0, 0.0));

    const cplx ik(0.0, idx.kappa);
    const cplx nu = idx.nu;
    const cplx shared = log_gamma(1.0 + nu - ik) + log_gamma(-nu - ik) - log_gamma(-ik);
    const cplx log_t = shared - log_gamma(1.0 - ik);
    // 1/[Gamma(1+nu) Gamma(-nu)] = -sin(pi nu)/pi, which vanishes smoothly at nu = 0
    const cplx log_r = shared + log_gamma(ik) + std::log(-std::sin(kPi * nu) / kPi);
    return Amplitudes::from(k, std::exp(log_t), std::exp(log_r));
}

Amplitudes amplitudes(const BarrierIndex& idx)
{
    return amplitudes(idx, idx.kappa);
}

cplx s_closed_form(const BarrierIndex& idx)
{
    require_positive_kappa(idx, "s_closed_form");
    const cplx ik(0.0, idx.kappa);
    const cplx nu = idx.nu;
    const cplx log_gammas = log_gamma(ik) + log_gamma(-nu - ik) - log_gamma(-ik) - log_gamma(-nu + ik);
    const cplx cos_ratio = std::cos(0.5 * kPi * (nu + ik)) / std::cos(0.5 * kPi * (nu - ik));
    return std::exp(log_gammas) * cos_ratio;
}

cplx s_function(const BarrierIndex& idx)
{
    const cplx s = amplitudes(idx).s;
    const cplx closed = s_closed_form(idx);
    if (std::abs(s - closed) > kRouteTolerance * std::max(1.0, std::abs(s)))
        throw ConsistencyError("s_function: T + R and the closed form of S disagree");
    return s;
}

ConnectionCoefficients connection_coefficients(const BarrierIndex& idx)
{
    const cplx nu = idx.nu;
    const cplx mu = idx.mu;
    const cplx den = std::sin(kPi * (nu + mu));
    if (std::abs(den) < 1e-300)
        throw DegenerateError("connection_coefficients: sin(pi(nu+mu)) vanishes");
    const cplx ratio = std::exp(log_gamma(nu - mu + 1.0) - log_gamma(nu + mu + 1.0)) / den;
    return {ratio * std::sin(kPi * nu), ratio * std::sin(kPi * mu)};
}

double log_state_normalization(const BarrierIndex& idx, const PhysicalParams& p, Normalization norm)
{
    require_positive_kappa(idx, "log_state_normalization");
    const cplx ik(0.0, idx.kappa);
    const double log_minus = detail::log_abs_sin(kPi * (idx.nu - ik));
    const double log_den =
        norm == Normalization::printed ? log_minus : 0.5 * (log_minus + detail::log_abs_sin(kPi * (idx.nu + ik)));
    return 0.5 * std::log(p.m / (2.0 * p.hbar * p.hbar * p.omega)) + 0.5 * detail::log_sinh(kPi * idx.kappa) -
           log_den;
}

cplx wavefunction_hypergeometric(const BarrierIndex& idx, const PhysicalParams& p, double x, Direction dir,
                                 Normalization norm)
{
    const double arg = (dir == Direction::right ? 1.0 : -1.0) * p.omega * x;
    return std::exp(log_state_normalization(idx, p, norm)) * hypergeometric_state(idx, arg).value;
}

WaveSample wavefunctions(const BarrierIndex& idx, const PhysicalParams& p, double x, Normalization convention)
{
    if (!std::isfinite(x)) throw DomainError("wavefunctions: non-finite position");
    const double norm = std::exp(log_state_normalization(idx, p, convention));
    const double alpha = p.omega * x;
    const cplx mu(0.0, idx.kappa);

    WaveSample sample;
    sample.x = x;
    const Direction dirs[] = {Direction::right, Direction::left};
    for (const Direction dir : dirs) {
        const double arg = dir == Direction::right ? alpha : -alpha;
        const auto legendre = legendre_P_tanh(idx.nu, mu, arg);
        const cplx psi = norm * legendre.value;

        // second route through the Euler-transformed hypergeometric form
        const auto hyp = hypergeometric_state(idx, arg);
        const cplx psi_hyp = norm * hyp.value;

        const double allowed = kRouteTolerance * std::abs(psi) + 10.0 * norm * (legendre.error + hyp.error) +
                               std::numeric_limits<double>::min();
        if (std::abs(psi - psi_hyp) > allowed)
            throw ConsistencyError("wavefunctions: Legendre and hypergeometric forms disagree");

        (dir == Direction::right ? sample.psi_right : sample.psi_left) = psi;
    }
    return sample;
}

cplx asymptotic_psi_right(const BarrierIndex& idx, const PhysicalParams& p, double x, Normalization norm)
{
    const double k = idx.kappa * p.omega;
    const Amplitudes amp = amplitudes(idx, k);
    const cplx ik(0.0, idx.kappa);
    // incident amplitude N: N T = norm / Gamma(1 - i kappa)
    const cplx incident = std::exp(log_state_normalization(idx, p, norm) - log_gamma(1.0 - ik)) / amp.t;
    const cplx forward = std::exp(cplx(0.0, k * x));
    if (x > 0.0) return incident * amp.t * forward;
    return incident * (forward + amp.r * std::conj(forward));
}

Amplitudes asymptotic_extract(std::span<const WaveSample> samples, const BarrierIndex& idx,
                              const PhysicalParams& p, Direction dir)
{
    require_positive_kappa(idx, "asymptotic_extract");
    const double k = idx.kappa * p.omega;
    const double sign = dir == Direction::right ? 1.0 : -1.0;

    // transmitted side: sign*x > 0
    cplx trans_sum{0.0, 0.0};
    int n_trans = 0;
    cplx rhs_fwd{0.0, 0.0};
    cplx rhs_back{0.0, 0.0};
    cplx cross{0.0, 0.0};
    int n_inc = 0;
    for (const auto& s : samples) {
        if (p.omega * std::abs(s.x) < kMinAsymptoticArgument) continue;
        const cplx psi = dir == Direction::right ? s.psi_right : s.psi_left;
        const cplx u = std::exp(cplx(0.0, sign * k * s.x));  // outgoing/incident plane wave
        if (sign * s.x > 0.0) {
            trans_sum += psi * std::conj(u);
            ++n_trans;
        } else {
            rhs_fwd += psi * std::conj(u);
            rhs_back += psi * u;
            cross += u * u;
            ++n_inc;
        }
    }
    if (n_trans < kMinSamplesPerSide || n_inc < kMinSamplesPerSide)
        throw DomainError("asymptotic_extract: need at least 4 samples with omega|x| >= 8 on each side");

    // normal equations for psi = g1 u + g2 conj(u):
    //   [ n        conj(cross) ] [g1]   [rhs_fwd ]
    //   [ cross    n           ] [g2] = [rhs_back]
    const double n = n_inc;
    const double sigma = std::abs(cross);
    if ((n + sigma) > 1e8 * (n - sigma))
        throw FitError("asymptotic_extract: sample spacing aliases e^{2ikx}; fit is ill-conditioned");
    const double det = n * n - sigma * sigma;
    const cplx g1 = (n * rhs_fwd - std::conj(cross) * rhs_back) / det;
    const cplx g2 = (n * rhs_back - cross * rhs_fwd) / det;
    const cplx g_trans = trans_sum / static_cast<double>(n_trans);

    return Amplitudes::from(k, g_trans / g1, g2 / g1);
}

}  // namespace coshbar
