#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "coshbar/cli/commands.hpp"
#include "coshbar/cli/parallel.hpp"
#include "coshbar/error.hpp"
#include "coshbar/oracle.hpp"
#include "coshbar/propagator.hpp"
#include "coshbar/scattering.hpp"
#include "coshbar/special.hpp"

namespace coshbar::cli {

namespace {

const double kGridV8[] = {0.1, 0.5, 1.0, 2.0, 5.0, 20.0};
const double kGridKappa[] = {0.1, 0.5, 1.0, 2.0, 5.0};

std::string label(std::initializer_list<std::pair<const char*, double>> parts, const char* what = nullptr)
{
    std::ostringstream s;
    s.precision(6);
    bool first = true;
    for (const auto& [k, v] : parts) {
        s << (first ? "" : " ") << k << '=' << v;
        first = false;
    }
    if (what) s << ' ' << what;
    return s.str();
}

// Evaluates `residual` and records a case; exceptions become failed cases.
void check(SuiteResult& suite, std::string name, double tolerance, const std::function<double()>& residual)
{
    CaseResult c;
    c.name = std::move(name);
    c.tolerance = tolerance;
    try {
        const double r = residual();
        c.residual = r;
        c.pass = std::isfinite(r) && r <= tolerance;
    } catch (const std::exception& e) {
        c.name += std::string(" [") + e.what() + "]";
        c.pass = false;
    }
    suite.cases.push_back(std::move(c));
}

// Physical parameters with hbar = m = omega = 1 realizing a given v8.
PhysicalParams unit_params(double v8)
{
    PhysicalParams p;
    p.v0 = v8 / 8.0;
    return p;
}

template <class F>
void over_grid(F&& f)
{
    for (double v8 : kGridV8)
        for (double kappa : kGridKappa) f(v8, kappa);
}

SuiteResult suite_unitarity()
{
    SuiteResult s{"unitarity", {}};
    over_grid([&](double v8, double kappa) {
        const Amplitudes a = amplitudes(reduce_dimensionless(v8, kappa));
        check(s, label({{"v8", v8}, {"kappa", kappa}}, "flux"), 1e-10, [&] { return std::abs(a.t2 + a.r2 - 1.0); });
        check(s, label({{"v8", v8}, {"kappa", kappa}}, "|S|"), 1e-10, [&] { return std::abs(std::abs(a.s) - 1.0); });
    });
    return s;
}

SuiteResult suite_connection()
{
    SuiteResult s{"connection", {}};
    over_grid([&](double v8, double kappa) {
        const auto idx = reduce_dimensionless(v8, kappa);
        check(s, label({{"v8", v8}, {"kappa", kappa}}, "|a|^2+|b|^2"), 1e-10, [&] {
            const auto c = connection_coefficients(idx);
            return std::abs(std::norm(c.a) + std::norm(c.b) - 1.0);
        });
        check(s, label({{"v8", v8}, {"kappa", kappa}}, "ab*+a*b"), 1e-10, [&] {
            const auto c = connection_coefficients(idx);
            return std::abs(c.a * std::conj(c.b) + std::conj(c.a) * c.b);
        });
    });
    return s;
}

SuiteResult suite_legendre_symmetry()
{
    SuiteResult s{"legendre-symmetry", {}};
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> lam(0.05, 3.0), kap(0.05, 5.0), xs(-0.95, 0.95);
    for (int i = 0; i < 50; ++i) {
        const double l = lam(rng), k = kap(rng), x = xs(rng);
        check(s, label({{"lambda", l}, {"kappa", k}, {"x", x}}), 1e-10, [&] {
            const cplx mu(0.0, k);
            const cplx p1 = legendre_P(cplx(-0.5, -l), mu, x);
            const cplx p2 = legendre_P(cplx(-0.5, l), mu, x);
            return std::abs(p1 - p2) / std::abs(p2);
        });
    }
    return s;
}

SuiteResult suite_hyp2f1_transform()
{
    SuiteResult s{"hyp2f1-transform", {}};
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> re(-1.5, 1.5), im(-1.5, 1.5), cre(0.5, 2.5), zs(0.0, 0.95);
    for (int i = 0; i < 50; ++i) {
        const cplx a(re(rng), im(rng)), b(re(rng), im(rng)), c(cre(rng), im(rng));
        const double z = zs(rng);
        check(s, label({{"draw", i}, {"z", z}}), 1e-9, [&] {
            const cplx lhs = hyp2f1(a, b, c, z);
            const cplx rhs = std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);
            return std::abs(lhs - rhs) / std::abs(lhs);
        });
    }
    return s;
}

SuiteResult suite_free_limit()
{
    SuiteResult s{"free-limit", {}};
    for (double kappa : kGridKappa) {
        check(s, label({{"v0", 0.0}, {"k", kappa}}, "|T-1|+|R|"), 0.0, [&] {
            PhysicalParams p;
            const Amplitudes a = amplitudes(reduce(p, kappa), kappa);
            return std::abs(a.t - 1.0) + std::abs(a.r);
        });
        check(s, label({{"v0", 1e-12}, {"k", kappa}}, "|T-1|"), 1e-6, [&] {
            PhysicalParams p;
            p.v0 = 1e-12;
            return std::abs(amplitudes(reduce(p, kappa), kappa).t - 1.0);
        });
    }
    return s;
}

// hbar = 2m = 1, g = 2, k = 1: V0 = g omega hbar^2 / (4m) keeps the area of
// the barrier equal to that of (hbar^2/2m) g delta(x).
SuiteResult suite_delta_limit()
{
    SuiteResult s{"delta-limit", {}};
    const double g = 2.0, k = 1.0;
    const cplx target = 2.0 * k / cplx(2.0 * k, g);
    const double omegas[] = {1e2, 1e3, 1e4};
    double err[3] = {NAN, NAN, NAN};
    for (int i = 0; i < 3; ++i) {
        const double omega = omegas[i];
        check(s, label({{"omega", omega}}, "|T-T_delta|"), i == 2 ? 1e-3 : 10.0 / omega, [&] {
            PhysicalParams p;
            p.m = 0.5;
            p.omega = omega;
            p.v0 = g * omega / (4.0 * p.m);
            err[i] = std::abs(amplitudes(reduce(p, k), k).t - target);
            return err[i];
        });
    }
    check(s, "log-log slope +1", 0.1, [&] {
        const double slope = (std::log(err[2]) - std::log(err[0])) / (std::log(omegas[2]) - std::log(omegas[0]));
        return std::abs(slope + 1.0);
    });
    return s;
}

SuiteResult suite_oracle(const SolverConfig& solver)
{
    SuiteResult s{"oracle", {}};
    std::vector<std::pair<double, double>> cells;
    over_grid([&](double v8, double kappa) { cells.emplace_back(v8, kappa); });
    std::vector<std::vector<CaseResult>> results(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [v8, kappa] = cells[i];
        SuiteResult local;
        const PhysicalParams p = unit_params(v8);
        std::optional<Amplitudes> exact, num;
        auto get = [&] {
            if (!num) {
                exact = amplitudes(reduce(p, kappa), kappa);
                num = numerov_amplitudes(p, kappa, solver);
            }
        };
        const auto name = [&](const char* w) { return label({{"v8", v8}, {"kappa", kappa}}, w); };
        check(local, name("T modulus"), 1e-6, [&] { get(); return std::abs(std::abs(num->t) / std::abs(exact->t) - 1.0); });
        check(local, name("T phase"), 1e-6, [&] { get(); return std::abs(std::arg(num->t / exact->t)); });
        check(local, name("R modulus"), 1e-6, [&] { get(); return std::abs(std::abs(num->r) / std::abs(exact->r) - 1.0); });
        check(local, name("R phase"), 1e-6, [&] { get(); return std::abs(std::arg(num->r / exact->r)); });
        results[i] = std::move(local.cases);
    });
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(s.cases));
    return s;
}

std::vector<WaveSample> asymptotic_samples(const BarrierIndex& idx, const PhysicalParams& p)
{
    std::vector<WaveSample> out;
    for (int side : {-1, 1})
        for (int j = 0; j < 16; ++j) out.push_back(wavefunctions(idx, p, side * (12.0 + 0.37 * j) / p.omega));
    return out;
}

SuiteResult suite_asymptotics()
{
    SuiteResult s{"asymptotics", {}};
    const std::pair<double, double> cells[] = {{0.5, 0.5}, {2.0, 1.0}, {5.0, 2.0}};
    for (const auto& [v8, kappa] : cells) {
        const PhysicalParams p = unit_params(v8);
        const auto idx = reduce(p, kappa);
        const Amplitudes exact = amplitudes(idx, kappa);
        std::vector<WaveSample> samples;
        const auto name = [&](const char* w) { return label({{"v8", v8}, {"kappa", kappa}}, w); };
        check(s, name("fit T"), 1e-6, [&] {
            samples = asymptotic_samples(idx, p);
            return std::abs(asymptotic_extract(samples, idx, p, Direction::right).t - exact.t) / std::abs(exact.t);
        });
        check(s, name("fit R"), 1e-6, [&] {
            return std::abs(asymptotic_extract(samples, idx, p, Direction::right).r - exact.r) / std::abs(exact.r);
        });
        check(s, name("left-moving S"), 1e-8, [&] {
            const Amplitudes right = asymptotic_extract(samples, idx, p, Direction::right);
            const Amplitudes left = asymptotic_extract(samples, idx, p, Direction::left);
            return std::abs(left.s - right.s);
        });
    }
    return s;
}

SuiteResult suite_s_consistency()
{
    SuiteResult s{"s-consistency", {}};
    over_grid([&](double v8, double kappa) {
        check(s, label({{"v8", v8}, {"kappa", kappa}}), 1e-10, [&] {
            const auto idx = reduce_dimensionless(v8, kappa);
            return std::abs(amplitudes(idx).s - s_closed_form(idx));
        });
    });
    return s;
}

SuiteResult suite_propagator(std::size_t grid_points)
{
    SuiteResult s{"propagator", {}};
    const double tau = 1.0;
    const double xs[] = {-0.5, 0.0, 0.5};

    const PhysicalParams free_p;
    for (double xf : xs)
        for (double xi : xs)
            check(s, label({{"v8", 0.0}, {"xf", xf}, {"xi", xi}}, "vs free"), 1e-6, [&] {
                const double f = free_kernel(free_p, xf, xi, tau);
                return std::abs(spectral_kernel(free_p, xf, xi, tau).value - f) / f;
            });

    const PhysicalParams p = unit_params(2.0);
    const double L = default_grid_half_width(p, tau, 0.5, 0.5);
    std::optional<GridPropagator> grid;
    std::string grid_error;
    try {
        grid.emplace(p, L, std::max<std::size_t>(grid_points, 200));
    } catch (const Error& e) {
        grid_error = e.what();
    }
    std::vector<std::pair<double, double>> pts;
    for (double xf : xs)
        for (double xi : xs) pts.emplace_back(xf, xi);
    std::vector<double> values(pts.size(), NAN);
    parallel_for(pts.size(), [&](std::size_t i) {
        try {
            values[i] = spectral_kernel(p, pts[i].first, pts[i].second, tau).value;
        } catch (const Error&) {
            // reported as a failed case below
        }
    });
    for (std::size_t i = 0; i < pts.size(); ++i)
        check(s, label({{"v8", 2.0}, {"xf", pts[i].first}, {"xi", pts[i].second}}, "vs grid"), 1e-3, [&] {
            if (!grid) throw ConvergenceError(grid_error);
            const double g = (*grid)(tau, pts[i].first, pts[i].second);
            return std::abs(values[i] - g) / g;
        });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::size_t j = (i % 3) * 3 + i / 3;  // swapped (xi, xf)
        if (j <= i) continue;
        check(s, label({{"v8", 2.0}, {"xf", pts[i].first}, {"xi", pts[i].second}}, "swap symmetry"), 1e-12,
              [&] { return std::abs(values[i] - values[j]) / std::abs(values[i]); });
    }
    return s;
}

}  // namespace

bool SuiteResult::passed() const
{
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "unitarity",  "connection", "legendre-symmetry", "hyp2f1-transform", "free-limit",
        "delta-limit", "oracle",    "asymptotics",       "s-consistency",    "propagator"};
    return names;
}

std::vector<SuiteResult> cmd_verify(const RunConfig& cfg)
{
    validate(cfg);
    const std::vector<std::string>& wanted = cfg.checks.empty() ? suite_names() : cfg.checks;
    for (const auto& name : wanted)
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw ConfigError("unknown suite '" + name + "'");

    const std::map<std::string, std::function<SuiteResult()>> runners = {
        {"unitarity", suite_unitarity},
        {"connection", suite_connection},
        {"legendre-symmetry", suite_legendre_symmetry},
        {"hyp2f1-transform", suite_hyp2f1_transform},
        {"free-limit", suite_free_limit},
        {"delta-limit", suite_delta_limit},
        {"oracle", [&] { return suite_oracle(cfg.solver); }},
        {"asymptotics", suite_asymptotics},
        {"s-consistency", suite_s_consistency},
        {"propagator", [&] { return suite_propagator(cfg.grid_points); }},
    };
    std::vector<SuiteResult> out;
    for (const auto& name : wanted) out.push_back(runners.at(name)());
    return out;
}

void write_report(std::ostream& out, const std::vector<SuiteResult>& suites, Format format)
{
    if (format == Format::csv) {
        Table t;
        t.columns = {"suite", "name", "residual", "tolerance", "pass"};
        for (const auto& s : suites)
            for (const auto& c : s.cases)
                t.rows.push_back({s.suite, c.name, c.residual ? Cell{*c.residual} : Cell{}, c.tolerance,
                                  std::string(c.pass ? "true" : "false")});
        write_table(out, t, Format::csv);
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json cases = nlohmann::ordered_json::array();
        for (const auto& c : s.cases) {
            nlohmann::ordered_json j;
            j["name"] = c.name;
            if (c.residual && std::isfinite(*c.residual)) j["residual"] = *c.residual;
            else j["residual"] = nullptr;
            j["tolerance"] = c.tolerance;
            j["pass"] = c.pass;
            cases.push_back(std::move(j));
        }
        nlohmann::ordered_json suite;
        suite["suite"] = s.suite;
        suite["cases"] = std::move(cases);
        doc.push_back(std::move(suite));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace coshbar::cli
