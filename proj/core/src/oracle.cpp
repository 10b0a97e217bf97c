#include "coshbar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "coshbar/error.hpp"

namespace coshbar {

namespace {

using ld = long double;
using cld = std::complex<long double>;

constexpr std::size_t kMinGridPoints = 200;

void check_solver_inputs(const PhysicalParams& p, double k)
{
    p.validate();
    if (!std::isfinite(k) || !(k > 0.0)) throw DomainError("numerov: wavenumber must be positive and finite");
}

// Wavenumber whose plane wave the Numerov recursion propagates exactly in a
// force-free region: cos(qh) = (1 - 5 k^2 h^2/12) / (1 + k^2 h^2/12).
ld numerov_wavenumber(ld k, ld h)
{
    const ld kh2 = k * k * h * h;
    return std::acos((1.0L - 5.0L * kh2 / 12.0L) / (1.0L + kh2 / 12.0L)) / h;
}

}  // namespace

double default_box_half_width(const PhysicalParams& p, double k, const SolverConfig& cfg)
{
    double L = std::max(10.0 / p.omega, 10.0 / k);
    if (p.v0 > 0.0) {
        const double ratio = p.v0 / (cfg.potential_smallness * p.energy(k));
        // small outward margin so the edge check is not decided by rounding in acosh
        if (ratio > 1.0) L = std::max(L, (1.0 + 1e-9) * std::acosh(std::sqrt(ratio)) / p.omega);
    }
    return L;
}

double default_step(const PhysicalParams& p, double k)
{
    return std::min(2.0 * std::numbers::pi / (40.0 * k), 1.0 / (40.0 * p.omega));
}

Amplitudes numerov_solve(const PhysicalParams& p, double k, double half_width, std::size_t steps,
                         BoundaryModel boundary)
{
    check_solver_inputs(p, k);
    if (!(half_width > 0.0) || steps < 4) throw DomainError("numerov: invalid box or step count");

    const ld L = half_width;
    const ld h = 2.0L * L / static_cast<ld>(steps);
    const ld two_m_over_hbar2 = 2.0L * static_cast<ld>(p.m) / (static_cast<ld>(p.hbar) * p.hbar);
    const ld energy = static_cast<ld>(p.hbar) * p.hbar * static_cast<ld>(k) * k / (2.0L * p.m);
    const ld h2_12 = h * h / 12.0L;

    auto position = [&](std::size_t n) { return -L + h * static_cast<ld>(n); };
    auto force = [&](std::size_t n) {
        const ld c = std::cosh(static_cast<ld>(p.omega) * position(n));
        return two_m_over_hbar2 * (static_cast<ld>(p.v0) / (c * c) - energy);
    };

    const ld q = boundary == BoundaryModel::discrete ? numerov_wavenumber(k, h) : static_cast<ld>(k);
    auto plane = [&](ld sign, std::size_t n) { return std::exp(cld(0.0L, sign * q * position(n))); };

    // Backward recursion: (1 - h^2 f_{n-1}/12) y_{n-1}
    //   = 2 (1 + 5 h^2 f_n/12) y_n - (1 - h^2 f_{n+1}/12) y_{n+1}
    cld y_next = plane(1.0L, steps);
    cld y_cur = plane(1.0L, steps - 1);
    ld f_next = force(steps);
    ld f_cur = force(steps - 1);
    for (std::size_t n = steps - 1; n >= 1; --n) {
        const ld f_prev = force(n - 1);
        const cld y_prev =
            (2.0L * (1.0L + 5.0L * h2_12 * f_cur) * y_cur - (1.0L - h2_12 * f_next) * y_next) /
            (1.0L - h2_12 * f_prev);
        y_next = y_cur;
        y_cur = y_prev;
        f_next = f_cur;
        f_cur = f_prev;
    }
    // y_cur = y_0, y_next = y_1
    const cld e0 = plane(1.0L, 0);
    const cld e1 = plane(1.0L, 1);
    const cld det = e0 * std::conj(e1) - std::conj(e0) * e1;
    const cld A = (y_cur * std::conj(e1) - y_next * std::conj(e0)) / det;
    const cld B = (e0 * y_next - e1 * y_cur) / det;

    const cld t = 1.0L / A;
    const cld r = B / A;
    return Amplitudes::from(k, cplx(static_cast<double>(t.real()), static_cast<double>(t.imag())),
                            cplx(static_cast<double>(r.real()), static_cast<double>(r.imag())));
}

Amplitudes numerov_amplitudes(const PhysicalParams& p, double k, const SolverConfig& cfg)
{
    check_solver_inputs(p, k);
    const double L = cfg.box_half_width > 0.0 ? cfg.box_half_width : default_box_half_width(p, k, cfg);
    const double h = cfg.step > 0.0 ? cfg.step : default_step(p, k);
    if (!std::isfinite(L) || !std::isfinite(h)) throw DomainError("numerov: invalid solver configuration");
    if (p.v0 > 0.0 && p.potential(L) > cfg.potential_smallness * p.energy(k))
        throw DomainError("numerov: potential at the box edge is not negligible against the energy");

    const auto steps = static_cast<std::size_t>(std::ceil(2.0 * L / h));
    const Amplitudes coarse = numerov_solve(p, k, L, steps, cfg.boundary);
    const Amplitudes fine = numerov_solve(p, k, L, 2 * steps, cfg.boundary);

    const double change = std::max(std::abs(fine.t - coarse.t), std::abs(fine.r - coarse.r));
    if (change > cfg.match_tolerance)
        throw ConvergenceError("numerov: step too coarse (h and h/2 differ by " + std::to_string(change) + ")");

    if (!cfg.extrapolate) return fine;
    const cplx t = fine.t + (fine.t - coarse.t) / 15.0;
    const cplx r = fine.r + (fine.r - coarse.r) / 15.0;
    return Amplitudes::from(k, t, r);
}

GridHamiltonian::GridHamiltonian(const PhysicalParams& p, double half_width, std::size_t points)
    : params_(p), half_width_(half_width), points_(points), spacing_(2.0 * half_width / static_cast<double>(points + 1))
{
    p.validate();
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("grid: box half-width must be positive");
    if (points < kMinGridPoints) throw DomainError("grid: at least 200 points required");

    const double kinetic = p.hbar * p.hbar / (2.0 * p.m * spacing_ * spacing_);
    Eigen::VectorXd diag(static_cast<Eigen::Index>(points));
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(points - 1), -kinetic);
    diagonal_.resize(points);
    for (std::size_t j = 0; j < points; ++j) {
        const double x = -half_width + spacing_ * static_cast<double>(j + 1);
        diagonal_[j] = 2.0 * kinetic + p.potential(x);
        diag[static_cast<Eigen::Index>(j)] = diagonal_[j];
    }
    offdiagonal_ = -kinetic;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw ConvergenceError("grid: eigensolver failed");

    energies_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + points);
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    modes_.assign(vecs.data(), vecs.data() + points * points);
}

double GridHamiltonian::max_residual() const
{
    double worst = 0.0;
    for (std::size_t n = 0; n < points_; ++n) {
        const double* v = &modes_[n * points_];
        double sq = 0.0;
        for (std::size_t j = 0; j < points_; ++j) {
            double hv = diagonal_[j] * v[j];
            if (j > 0) hv += offdiagonal_ * v[j - 1];
            if (j + 1 < points_) hv += offdiagonal_ * v[j + 1];
            const double d = hv - energies_[n] * v[j];
            sq += d * d;
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    return worst;
}

GridHamiltonian::Stencil GridHamiltonian::stencil(double x) const
{
    if (!(std::abs(x) < half_width_)) throw DomainError("grid: evaluation point outside the box");

    // node j sits at -L + (j+1) dx; the walls are virtual nodes -1 and N with value 0
    const double s = (x + half_width_) / spacing_ - 1.0;
    const double nearest = std::round(s);
    Stencil st;
    if (std::abs(s - nearest) < 1e-9 && nearest >= 0.0 && nearest < static_cast<double>(points_)) {
        st.first = static_cast<std::size_t>(nearest);
        st.count = 1;
        st.weights[0] = 1.0;
        return st;
    }
    // 4-point Lagrange on virtual nodes base-1 .. base+2; wall nodes contribute zero
    const auto base = static_cast<long>(std::floor(s));
    const double t = s - static_cast<double>(base);
    const double w[4] = {
        -t * (t - 1.0) * (t - 2.0) / 6.0,
        (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
        -(t + 1.0) * t * (t - 2.0) / 2.0,
        (t + 1.0) * t * (t - 1.0) / 6.0,
    };
    const long lo = std::max(base - 1, 0L);
    const long hi = std::min(base + 2, static_cast<long>(points_) - 1);
    st.first = static_cast<std::size_t>(lo);
    st.count = static_cast<std::size_t>(hi - lo + 1);
    for (long j = lo; j <= hi; ++j) st.weights[j - lo] = w[j - (base - 1)];
    return st;
}

double GridHamiltonian::mode_value(const Stencil& s, std::size_t n) const
{
    const double* v = &modes_[n * points_];
    double value = 0.0;
    for (std::size_t i = 0; i < s.count; ++i) value += s.weights[i] * v[s.first + i];
    return value;
}

double GridHamiltonian::kernel(double tau, double xf, double xi) const
{
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("grid: tau must be positive");
    const Stencil sf = stencil(xf);
    const Stencil si = stencil(xi);
    double sum = 0.0;
    for (std::size_t n = 0; n < points_; ++n) {
        const double weight = std::exp(-energies_[n] * tau / params_.hbar);
        if (weight == 0.0) break;  // energies ascend
        sum += weight * (mode_value(sf, n) * mode_value(si, n));
    }
    return sum / spacing_;
}

GridPropagator::GridPropagator(const PhysicalParams& p, double half_width, std::size_t points,
                               double convergence_tolerance)
    : coarse_(p, half_width, points), fine_(p, half_width, 2 * points + 1), tolerance_(convergence_tolerance)
{
}

GridPropagator::Value GridPropagator::evaluate(double tau, double xf, double xi) const
{
    const double coarse = coarse_.kernel(tau, xf, xi);
    const double fine = fine_.kernel(tau, xf, xi);
    if (std::abs(fine - coarse) > tolerance_ * std::abs(fine))
        throw ConvergenceError("grid: doubling the grid changes the kernel beyond tolerance");
    return {(4.0 * fine - coarse) / 3.0, coarse, fine};
}

double grid_propagator(const PhysicalParams& p, double half_width, std::size_t points, double tau, double xf,
                       double xi)
{
    return GridPropagator(p, half_width, points)(tau, xf, xi);
}

double default_grid_half_width(const PhysicalParams& p, double tau, double xf, double xi)
{
    const double reach = std::max(std::abs(xf), std::abs(xi)) + 9.0 * std::sqrt(p.hbar * tau / p.m);
    return std::max(reach, 4.0 / p.omega);
}

}  // namespace coshbar
