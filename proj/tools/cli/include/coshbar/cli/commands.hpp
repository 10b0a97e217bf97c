#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coshbar/cli/config.hpp"
#include "coshbar/cli/table.hpp"

namespace coshbar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct CommandResult {
    Table table;
    int exit_code = kExitOk;
    std::vector<std::string> notes;  // human-readable diagnostics for stderr
};

/// One row per k: k, kappa, v8, Re/Im T, Re/Im R, |T|^2, |R|^2, Re/Im S,
/// unitarity residual, [Numerov T, R and deviation], flag. k = 0 yields the
/// zero-energy limit row (T = 0, R = -1; free values when v0 = 0).
[[nodiscard]] CommandResult cmd_scatter(const RunConfig& cfg);

/// One row per (k, x): Psi_right, Psi_left and, where omega|x| >= 8, the
/// plane-wave asymptotic form with its relative deviation. The notes carry
/// the asymptotic fit of T and R per k.
[[nodiscard]] CommandResult cmd_wavefunction(const RunConfig& cfg);

/// One row per (xf, xi): spectral kernel, grid-oracle kernel, relative
/// deviation, quadrature error and the free kernel for reference.
[[nodiscard]] CommandResult cmd_propagator(const RunConfig& cfg);

struct CaseResult {
    std::string name;
    std::optional<double> residual;  // empty when the case threw
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    [[nodiscard]] bool passed() const;
};

/// Names accepted by --suite, in execution order.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs the requested suites (all when cfg.checks is empty). Unknown names
/// raise ConfigError.
[[nodiscard]] std::vector<SuiteResult> cmd_verify(const RunConfig& cfg);

/// JSON: [{suite, cases: [{name, residual, tolerance, pass}]}].
/// CSV: suite,name,residual,tolerance,pass.
void write_report(std::ostream& out, const std::vector<SuiteResult>& suites, Format format);

}  // namespace coshbar::cli
