#include "coshbar/cli/app.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coshbar/cli/commands.hpp"
#include "coshbar/cli/config.hpp"
#include "coshbar/error.hpp"

namespace coshbar::cli {

namespace {

// Raw flag values; anything left unset keeps the config-file or default value.
struct Flags {
    std::string config;
    std::optional<double> omega, v0, hbar, m, tau, box, step, match_tolerance;
    std::vector<double> k;
    std::string k_range, x_range, format, out, boundary, normalization;
    std::vector<std::string> suites, points;
    std::optional<std::size_t> grid;
    bool oracle = false;
};

void add_common(CLI::App& sub, Flags& f)
{
    sub.add_option("--config", f.config, "JSON configuration file")->check(CLI::ExistingFile);
    sub.add_option("--omega", f.omega, "barrier width parameter omega");
    sub.add_option("--v0", f.v0, "barrier height V0");
    sub.add_option("--hbar", f.hbar, "reduced Planck constant (default 1)");
    sub.add_option("--m", f.m, "particle mass (default 1)");
    sub.add_option("--k", f.k, "wavenumber(s), comma separated")->delimiter(',');
    sub.add_option("--k-range", f.k_range, "wavenumber sweep a:b:n");
    sub.add_option("--format", f.format, "csv or json");
    sub.add_option("--out", f.out, "output file (default stdout)");
}

void add_oracle(CLI::App& sub, Flags& f)
{
    sub.add_flag("--oracle", f.oracle, "add Numerov oracle columns");
    sub.add_option("--box", f.box, "oracle box half-width L");
    sub.add_option("--step", f.step, "oracle step h");
    sub.add_option("--match-tolerance", f.match_tolerance, "oracle h vs h/2 tolerance");
    sub.add_option("--boundary", f.boundary, "oracle plane-wave model: discrete or continuum");
}

RunConfig build_config(const Flags& f)
{
    RunConfig cfg;
    if (!f.config.empty()) load_config_file(f.config, cfg);
    if (f.omega) cfg.params.omega = *f.omega;
    if (f.v0) cfg.params.v0 = *f.v0;
    if (f.hbar) cfg.params.hbar = *f.hbar;
    if (f.m) cfg.params.m = *f.m;
    if (!f.k.empty() && !f.k_range.empty()) throw ConfigError("give either --k or --k-range, not both");
    if (!f.k.empty()) cfg.k_values = f.k;
    if (!f.k_range.empty()) cfg.k_values = parse_range(f.k_range);
    if (!f.format.empty()) cfg.format = parse_format(f.format);
    if (!f.out.empty()) cfg.out_path = f.out;
    if (!f.suites.empty()) cfg.checks = f.suites;
    if (f.oracle) cfg.oracle = true;
    if (f.box) cfg.solver.box_half_width = *f.box;
    if (f.step) cfg.solver.step = *f.step;
    if (f.match_tolerance) cfg.solver.match_tolerance = *f.match_tolerance;
    if (!f.boundary.empty()) cfg.solver.boundary = parse_boundary(f.boundary);
    if (!f.x_range.empty()) cfg.x_values = parse_range(f.x_range);
    if (!f.normalization.empty()) cfg.normalization = parse_normalization(f.normalization);
    if (f.tau) cfg.tau = *f.tau;
    if (!f.points.empty()) {
        cfg.points.clear();
        for (const auto& p : f.points) cfg.points.push_back(parse_point(p));
    }
    if (f.grid) cfg.grid_points = *f.grid;
    validate(cfg);
    return cfg;
}

// Writes through the --out file when one is configured.
template <class Emit>
void emit(const RunConfig& cfg, std::ostream& out, Emit&& body)
{
    if (cfg.out_path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot open output file '" + cfg.out_path + "'");
    body(file);
    if (!file) throw ConfigError("failed writing '" + cfg.out_path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scattering off the barrier V0/cosh^2(omega x): amplitudes, states, propagator, checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "coshbar 0.1.0");

    Flags f;
    auto* scatter = app.add_subcommand("scatter", "T, R and S for a sweep of wavenumbers");
    add_common(*scatter, f);
    add_oracle(*scatter, f);

    auto* wave = app.add_subcommand("wavefunction", "energy-normalized scattering states on an x grid");
    add_common(*wave, f);
    wave->add_option("--x-range", f.x_range, "positions a:b:n (default -10:10:201 over omega)");
    wave->add_option("--normalization", f.normalization, "energy (default) or printed");

    auto* prop = app.add_subcommand("propagator", "Euclidean propagator from the spectral integral and the grid");
    add_common(*prop, f);
    prop->add_option("--tau", f.tau, "Euclidean time (default 1)");
    prop->add_option("--points", f.points, "xf:xi pairs (default {-0.5,0,0.5}^2)");
    prop->add_option("--grid", f.grid, "grid oracle points N (0 disables, default 600)");
    prop->add_option("--normalization", f.normalization, "energy (default) or printed");

    auto* verify = app.add_subcommand("verify", "run the verification suites and report residuals");
    add_common(*verify, f);
    add_oracle(*verify, f);
    verify->add_option("--suite", f.suites, "suite name (repeatable); default all");
    verify->add_option("--grid", f.grid, "grid oracle points N for the propagator suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        const RunConfig cfg = build_config(f);

        if (verify->parsed()) {
            const auto suites = cmd_verify(cfg);
            emit(cfg, out, [&](std::ostream& o) { write_report(o, suites, cfg.format); });
            int failed = 0;
            for (const auto& s : suites)
                for (const auto& c : s.cases)
                    if (!c.pass) {
                        ++failed;
                        err << "FAIL " << s.suite << ": " << c.name << '\n';
                    }
            return failed ? kExitChecksFailed : kExitOk;
        }

        CommandResult result;
        if (scatter->parsed()) result = cmd_scatter(cfg);
        else if (wave->parsed()) result = cmd_wavefunction(cfg);
        else result = cmd_propagator(cfg);

        emit(cfg, out, [&](std::ostream& o) { write_table(o, result.table, cfg.format); });
        for (const auto& note : result.notes) err << note << '\n';
        return result.exit_code;
    } catch (const ConfigError& e) {
        err << "coshbar: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "coshbar: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace coshbar::cli
