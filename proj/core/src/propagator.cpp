#include "coshbar/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "coshbar/error.hpp"
#include "coshbar/special.hpp"

namespace coshbar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffExponent = 36.8413614879047;  // -log(1e-16)
constexpr double kImagTolerance = 1e-10;

struct Panel {
    cplx value;
    double error;
};

detail::GaussRule build_gauss_rule()
{
    constexpr std::size_t n = detail::GaussRule::order;
    detail::GaussRule rule{};
    for (std::size_t i = 0; i < n / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

class Quadrature {
public:
    Quadrature(const PhysicalParams& p, double xf, double xi, double tau, const SpectralConfig& cfg)
        : p_(p), xf_(xf), xi_(xi), tau_(tau), cfg_(cfg), rule_(detail::gauss_legendre_20())
    {
    }

    cplx rule(double a, double b, double* l1 = nullptr) const
    {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        cplx sum{0.0, 0.0};
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
            const cplx f = spectral_integrand(p_, mid + half * rule_.nodes[i], xf_, xi_, tau_, cfg_.normalization);
            sum += rule_.weights[i] * f;
            abs_sum += rule_.weights[i] * std::abs(f);
        }
        if (l1) *l1 = half * abs_sum;
        return half * sum;
    }

    // Accepts [a, b] once the two halves reproduce the whole panel within its
    // share of the absolute budget.
    Panel adapt(double a, double b, cplx whole, double budget_per_length, int depth) const
    {
        const double m = 0.5 * (a + b);
        const cplx left = rule(a, m);
        const cplx right = rule(m, b);
        const double err = std::abs(left + right - whole);
        if (err <= budget_per_length * (b - a)) return {left + right, err};
        if (depth >= cfg_.max_depth)
            throw ConvergenceError("spectral_kernel: panel [" + std::to_string(a) + ", " + std::to_string(b) +
                                   "] did not converge");
        const Panel l = adapt(a, m, left, budget_per_length, depth + 1);
        const Panel r = adapt(m, b, right, budget_per_length, depth + 1);
        return {l.value + r.value, l.error + r.error};
    }

private:
    const PhysicalParams& p_;
    double xf_;
    double xi_;
    double tau_;
    const SpectralConfig& cfg_;
    const detail::GaussRule& rule_;
};

}  // namespace

namespace detail {

const GaussRule& gauss_legendre_20()
{
    static const GaussRule rule = build_gauss_rule();
    return rule;
}

}  // namespace detail

double free_kernel(const PhysicalParams& p, double xf, double xi, double tau)
{
    p.validate();
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("free_kernel: tau must be positive");
    const double d = xf - xi;
    return std::sqrt(p.m / (2.0 * kPi * p.hbar * tau)) * std::exp(-p.m * d * d / (2.0 * p.hbar * tau));
}

double spectral_cutoff(const PhysicalParams& p, double tau)
{
    return std::sqrt(2.0 * p.m * kCutoffExponent / (p.hbar * tau));
}

cplx spectral_integrand(const PhysicalParams& p, double k, double xf, double xi, double tau, Normalization norm)
{
    const BarrierIndex idx = reduce(p, k);
    const double kappa = idx.kappa;
    const cplx mu(0.0, kappa);

    // log of the k-measure times e^{-E tau/hbar}, split evenly over the two
    // factors of each product so neither leaves double range
    const double log_minus = detail::log_abs_sin(kPi * (idx.nu - mu));
    const double log_den =
        norm == Normalization::printed ? 2.0 * log_minus : log_minus + detail::log_abs_sin(kPi * (idx.nu + mu));
    const double log_weight =
        std::log(0.5 * kappa) + detail::log_sinh(kPi * kappa) - log_den - p.energy(k) * tau / p.hbar;
    const double half_weight = std::exp(0.5 * log_weight);

    const double af = p.omega * xf;
    const double ai = p.omega * xi;
    const cplx pf = half_weight * legendre_P_tanh(idx.nu, mu, af).value;
    const cplx pi = half_weight * legendre_P_tanh(idx.nu, mu, ai).value;
    const cplx mf = half_weight * legendre_P_tanh(idx.nu, mu, -af).value;
    const cplx mi = half_weight * legendre_P_tanh(idx.nu, mu, -ai).value;
    return pf * std::conj(pi) + mf * std::conj(mi);
}

KernelValue spectral_kernel(const PhysicalParams& p, double xf, double xi, double tau, const SpectralConfig& cfg)
{
    p.validate();
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("spectral_kernel: tau must be positive");
    if (!std::isfinite(xf) || !std::isfinite(xi)) throw DomainError("spectral_kernel: non-finite position");
    if (cfg.initial_panels < 1 || !(cfg.rel_tolerance > 0.0))
        throw DomainError("spectral_kernel: invalid quadrature configuration");

    const double k_min = cfg.kmin_factor * p.omega;
    const double k_max = spectral_cutoff(p, tau);
    if (k_max > cfg.max_kappa * p.omega)
        throw DomainError("spectral_kernel: tau too small, cutoff k = " + std::to_string(k_max) +
                          " exceeds the configured kappa cap");
    if (!(k_max > k_min)) throw DomainError("spectral_kernel: empty wavenumber range");

    Quadrature quad(p, xf, xi, tau, cfg);

    // first pass fixes the absolute budget from the size of the integral
    const int n = cfg.initial_panels;
    const double width = (k_max - k_min) / n;
    std::vector<cplx> coarse(static_cast<std::size_t>(n));
    cplx total{0.0, 0.0};
    double l1 = 0.0;
    for (int i = 0; i < n; ++i) {
        double panel_l1 = 0.0;
        coarse[static_cast<std::size_t>(i)] = quad.rule(k_min + i * width, k_min + (i + 1) * width, &panel_l1);
        total += coarse[static_cast<std::size_t>(i)];
        l1 += panel_l1;
    }
    // when the kernel is tiny against the integrand size, rounding in the
    // oscillating sum sets the attainable accuracy
    const double budget = std::max({cfg.rel_tolerance * std::abs(total.real()),
                                    256.0 * std::numeric_limits<double>::epsilon() * l1,
                                    std::numeric_limits<double>::min()});
    const double budget_per_length = budget / (k_max - k_min);

    cplx sum{0.0, 0.0};
    double error = 0.0;
    for (int i = 0; i < n; ++i) {
        const Panel panel = quad.adapt(k_min + i * width, k_min + (i + 1) * width,
                                       coarse[static_cast<std::size_t>(i)], budget_per_length, 0);
        sum += panel.value;
        error += panel.error;
    }

    // [0, k_min]: rectangle with the local slope as its error
    const cplx f1 = spectral_integrand(p, k_min, xf, xi, tau, cfg.normalization);
    const cplx f2 = spectral_integrand(p, 2.0 * k_min, xf, xi, tau, cfg.normalization);
    sum += k_min * f1;
    error += 0.5 * k_min * std::abs(f2 - f1);

    KernelValue out;
    out.xf = xf;
    out.xi = xi;
    out.tau = tau;
    out.value = sum.real();
    out.imag_part = sum.imag();
    out.quad_error = error;

    const double floor = error + 64.0 * std::numeric_limits<double>::epsilon() * l1;
    if (std::abs(out.imag_part) > kImagTolerance * std::abs(out.value) + floor)
        throw ConsistencyError("spectral_kernel: imaginary part " + std::to_string(out.imag_part) +
                               " is not negligible");
    return out;
}

}  // namespace coshbar
