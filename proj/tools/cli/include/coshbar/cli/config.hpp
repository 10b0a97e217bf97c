#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coshbar/oracle.hpp"
#include "coshbar/params.hpp"
#include "coshbar/scattering.hpp"

namespace coshbar::cli {

// Bad configuration file or flag value; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
    PhysicalParams params;  // hbar = m = omega = 1, v0 = 0 unless set
    std::vector<double> k_values{1.0};

    Format format = Format::csv;
    std::string out_path;  // empty: stdout
    std::vector<std::string> checks;  // empty: every suite

    bool oracle = false;
    SolverConfig solver;

    std::vector<double> x_values;  // wavefunction grid; empty selects -10:10:201 in units of 1/omega
    Normalization normalization = Normalization::energy;

    double tau = 1.0;
    std::vector<std::pair<double, double>> points;  // (xf, xi); empty selects {-0.5, 0, 0.5}^2
    std::size_t grid_points = 600;
};

/// Evenly spaced values from "a:b:n" (n >= 1; n = 1 yields a).
[[nodiscard]] std::vector<double> parse_range(const std::string& spec);

/// "xf:xi" pair.
[[nodiscard]] std::pair<double, double> parse_point(const std::string& spec);

/// Reads a JSON config document into cfg. Every field is optional; unknown
/// keys and wrongly typed values raise ConfigError.
void load_config_file(const std::string& path, RunConfig& cfg);
void load_config_text(const std::string& text, RunConfig& cfg);

/// Throws ConfigError on an empty sweep, invalid physics or bad ranges.
void validate(const RunConfig& cfg);

[[nodiscard]] Format parse_format(const std::string& s);
[[nodiscard]] BoundaryModel parse_boundary(const std::string& s);
[[nodiscard]] Normalization parse_normalization(const std::string& s);

}  // namespace coshbar::cli
