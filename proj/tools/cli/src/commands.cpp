#include "coshbar/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "coshbar/cli/parallel.hpp"
#include "coshbar/error.hpp"
#include "coshbar/oracle.hpp"
#include "coshbar/propagator.hpp"
#include "coshbar/scattering.hpp"

namespace coshbar::cli {

namespace {

constexpr double kResidualLimit = 1e-8;
constexpr double kAsymptoticArgument = 8.0;

std::string describe(const std::exception& e)
{
    return std::string("error: ") + e.what();
}

std::vector<Cell> amplitude_cells(const BarrierIndex& idx, const Amplitudes& a)
{
    return {a.k,        idx.kappa,  idx.v8,    a.t.real(), a.t.imag(), a.r.real(), a.r.imag(),
            a.t2,       a.r2,       a.s.real(), a.s.imag(), a.unitarity_residual()};
}

std::vector<double> default_x_grid(const PhysicalParams& p)
{
    std::vector<double> xs(201);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = (-10.0 + 0.1 * static_cast<double>(i)) / p.omega;
    return xs;
}

std::vector<std::pair<double, double>> default_points()
{
    std::vector<std::pair<double, double>> pts;
    for (double xf : {-0.5, 0.0, 0.5})
        for (double xi : {-0.5, 0.0, 0.5}) pts.emplace_back(xf, xi);
    return pts;
}

std::string format_fit(double k, const char* side, const Amplitudes& fit, const Amplitudes& exact)
{
    std::ostringstream s;
    s.precision(10);
    s << "k=" << k << " " << side << " asymptotic fit: T=" << fit.t << " R=" << fit.r
      << " |dT|=" << std::abs(fit.t - exact.t) << " |dR|=" << std::abs(fit.r - exact.r)
      << " |dS|=" << std::abs(fit.s - exact.s);
    return s.str();
}

}  // namespace

CommandResult cmd_scatter(const RunConfig& cfg)
{
    validate(cfg);
    CommandResult result;
    Table& table = result.table;
    table.columns = {"k", "kappa", "v8", "re_t", "im_t", "re_r", "im_r", "t2", "r2", "re_s", "im_s",
                     "unitarity_residual"};
    if (cfg.oracle)
        for (const char* c : {"numerov_re_t", "numerov_im_t", "numerov_re_r", "numerov_im_r", "oracle_max_dev"})
            table.columns.emplace_back(c);
    table.columns.emplace_back("flag");

    const std::size_t width = table.columns.size();
    const std::size_t n = cfg.k_values.size();
    table.rows.assign(n, std::vector<Cell>(width));
    std::vector<int> failed(n, 0);

    parallel_for(n, [&](std::size_t i) {
        const double k = cfg.k_values[i];
        std::vector<Cell>& row = table.rows[i];
        row[0] = k;
        std::string flag = "ok";
        try {
            const BarrierIndex idx = reduce(cfg.params, k);
            Amplitudes a;
            if (k == 0.0) {
                // zero-energy limit: total reflection, or the free particle when there is no barrier
                a = cfg.params.v0 == 0.0 ? Amplitudes::from(0.0, {1.0, 0.0}, {0.0, 0.0})
                                         : Amplitudes::from(0.0, {0.0, 0.0}, {-1.0, 0.0});
                flag = "limit";
            } else {
                a = amplitudes(idx, k);
            }
            const auto cells = amplitude_cells(idx, a);
            std::copy(cells.begin(), cells.end(), row.begin());
            if (!(a.unitarity_residual() < kResidualLimit)) {
                flag = "residual";
                failed[i] = 1;
            }
            if (cfg.oracle && k > 0.0) {
                try {
                    const Amplitudes o = numerov_amplitudes(cfg.params, k, cfg.solver);
                    row[12] = o.t.real();
                    row[13] = o.t.imag();
                    row[14] = o.r.real();
                    row[15] = o.r.imag();
                    row[16] = std::max(std::abs(o.t - a.t), std::abs(o.r - a.r));
                } catch (const Error& e) {
                    flag = std::string("oracle ") + describe(e);
                    failed[i] = 1;
                }
            }
        } catch (const Error& e) {
            flag = describe(e);
            failed[i] = 1;
        }
        row[width - 1] = flag;
    });

    if (std::any_of(failed.begin(), failed.end(), [](int f) { return f != 0; })) result.exit_code = kExitNumerical;
    return result;
}

CommandResult cmd_wavefunction(const RunConfig& cfg)
{
    validate(cfg);
    CommandResult result;
    Table& table = result.table;
    table.columns = {"k",           "x",           "re_psi_right", "im_psi_right", "re_psi_left",
                     "im_psi_left", "re_psi_asym", "im_psi_asym",  "asym_rel_dev", "flag"};

    const std::vector<double> xs = cfg.x_values.empty() ? default_x_grid(cfg.params) : cfg.x_values;
    const std::size_t nx = xs.size();
    const std::size_t n = cfg.k_values.size() * nx;
    table.rows.assign(n, std::vector<Cell>(table.columns.size()));
    std::vector<WaveSample> samples(n);
    std::vector<int> ok(n, 0);

    parallel_for(n, [&](std::size_t i) {
        const double k = cfg.k_values[i / nx];
        const double x = xs[i % nx];
        std::vector<Cell>& row = table.rows[i];
        row[0] = k;
        row[1] = x;
        try {
            const BarrierIndex idx = reduce(cfg.params, k);
            const WaveSample w = wavefunctions(idx, cfg.params, x, cfg.normalization);
            samples[i] = w;
            row[2] = w.psi_right.real();
            row[3] = w.psi_right.imag();
            row[4] = w.psi_left.real();
            row[5] = w.psi_left.imag();
            if (cfg.params.omega * std::abs(x) >= kAsymptoticArgument) {
                const cplx asym = asymptotic_psi_right(idx, cfg.params, x, cfg.normalization);
                row[6] = asym.real();
                row[7] = asym.imag();
                row[8] = std::abs(w.psi_right - asym) / std::abs(w.psi_right);
            }
            row[9] = std::string("ok");
            ok[i] = 1;
        } catch (const Error& e) {
            row[9] = describe(e);
        }
    });

    if (std::any_of(ok.begin(), ok.end(), [](int f) { return f == 0; })) result.exit_code = kExitNumerical;

    for (std::size_t j = 0; j < cfg.k_values.size(); ++j) {
        const double k = cfg.k_values[j];
        if (!(k > 0.0)) continue;
        std::vector<WaveSample> good;
        for (std::size_t i = j * nx; i < (j + 1) * nx; ++i)
            if (ok[i]) good.push_back(samples[i]);
        try {
            const BarrierIndex idx = reduce(cfg.params, k);
            const Amplitudes exact = amplitudes(idx, k);
            result.notes.push_back(
                format_fit(k, "right", asymptotic_extract(good, idx, cfg.params, Direction::right), exact));
            result.notes.push_back(
                format_fit(k, "left", asymptotic_extract(good, idx, cfg.params, Direction::left), exact));
        } catch (const Error& e) {
            result.notes.push_back("k=" + format_number(k) + " asymptotic fit skipped: " + e.what());
        }
    }
    return result;
}

CommandResult cmd_propagator(const RunConfig& cfg)
{
    validate(cfg);
    CommandResult result;
    Table& table = result.table;
    table.columns = {"xf", "xi", "tau", "k_spectral", "k_oracle", "rel_dev", "quad_error", "k_free", "flag"};

    const auto points = cfg.points.empty() ? default_points() : cfg.points;
    const std::size_t n = points.size();
    table.rows.assign(n, std::vector<Cell>(table.columns.size()));
    std::vector<int> failed(n, 0);

    std::optional<GridPropagator> grid;
    std::string grid_error;
    if (cfg.grid_points > 0) {
        double L = 0.0;
        for (const auto& [xf, xi] : points) L = std::max(L, default_grid_half_width(cfg.params, cfg.tau, xf, xi));
        try {
            grid.emplace(cfg.params, L, cfg.grid_points);
        } catch (const Error& e) {
            grid_error = describe(e);
        }
    }

    SpectralConfig spectral;
    spectral.normalization = cfg.normalization;

    parallel_for(n, [&](std::size_t i) {
        const auto [xf, xi] = points[i];
        std::vector<Cell>& row = table.rows[i];
        row[0] = xf;
        row[1] = xi;
        row[2] = cfg.tau;
        std::string flag = "ok";
        std::optional<double> spec;
        try {
            const KernelValue kv = spectral_kernel(cfg.params, xf, xi, cfg.tau, spectral);
            spec = kv.value;
            row[3] = kv.value;
            row[6] = kv.quad_error;
        } catch (const Error& e) {
            flag = describe(e);
            failed[i] = 1;
        }
        row[7] = free_kernel(cfg.params, xf, xi, cfg.tau);
        if (grid) {
            try {
                const double g = (*grid)(cfg.tau, xf, xi);
                row[4] = g;
                if (spec) row[5] = std::abs(*spec - g) / std::abs(g);
            } catch (const Error& e) {
                if (flag == "ok") flag = std::string("oracle ") + describe(e);
            }
        } else if (!grid_error.empty() && flag == "ok") {
            flag = "oracle " + grid_error;
        }
        row[8] = flag;
    });

    if (std::any_of(failed.begin(), failed.end(), [](int f) { return f != 0; })) result.exit_code = kExitNumerical;
    return result;
}

}  // namespace coshbar::cli
