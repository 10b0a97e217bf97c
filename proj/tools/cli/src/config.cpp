#include "coshbar/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "coshbar/error.hpp"

namespace coshbar::cli {

namespace {

using nlohmann::json;

double to_number(const std::string& s, const char* what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError(std::string("cannot parse ") + what + " '" + s + "'");
    }
    if (used != s.size()) throw ConfigError(std::string("trailing characters in ") + what + " '" + s + "'");
    return v;
}

void require_object(const json& j, const std::string& where, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

double number(const json& j, const std::string& where)
{
    if (!j.is_number()) throw ConfigError(where + ": expected a number");
    return j.get<double>();
}

std::string text(const json& j, const std::string& where)
{
    if (!j.is_string()) throw ConfigError(where + ": expected a string");
    return j.get<std::string>();
}

std::vector<double> range_from(const json& j, const std::string& where)
{
    require_object(j, where, {"start", "stop", "count"});
    if (!j.contains("start") || !j.contains("stop") || !j.contains("count"))
        throw ConfigError(where + ": needs start, stop and count");
    const json& n = j.at("count");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw ConfigError(where + ".count: expected an integer >= 1");
    std::ostringstream spec;
    spec.precision(17);
    spec << number(j.at("start"), where + ".start") << ':' << number(j.at("stop"), where + ".stop") << ':'
         << n.get<long long>();
    return parse_range(spec.str());
}

void apply_document(const json& doc, RunConfig& cfg)
{
    require_object(doc, "config", {"units", "barrier", "sweep", "outputs", "checks", "oracle", "wavefunction",
                                   "propagator"});

    if (doc.contains("units")) {
        const json& u = doc.at("units");
        require_object(u, "units", {"hbar", "m"});
        if (u.contains("hbar")) cfg.params.hbar = number(u.at("hbar"), "units.hbar");
        if (u.contains("m")) cfg.params.m = number(u.at("m"), "units.m");
    }
    if (doc.contains("barrier")) {
        const json& b = doc.at("barrier");
        require_object(b, "barrier", {"omega", "v0"});
        if (b.contains("omega")) cfg.params.omega = number(b.at("omega"), "barrier.omega");
        if (b.contains("v0")) cfg.params.v0 = number(b.at("v0"), "barrier.v0");
    }
    if (doc.contains("sweep")) {
        const json& s = doc.at("sweep");
        require_object(s, "sweep", {"k_values", "k_range"});
        if (s.contains("k_values") && s.contains("k_range"))
            throw ConfigError("sweep: give either k_values or k_range, not both");
        if (s.contains("k_values")) {
            const json& ks = s.at("k_values");
            if (!ks.is_array()) throw ConfigError("sweep.k_values: expected an array");
            cfg.k_values.clear();
            for (const json& k : ks) cfg.k_values.push_back(number(k, "sweep.k_values[]"));
        }
        if (s.contains("k_range")) cfg.k_values = range_from(s.at("k_range"), "sweep.k_range");
    }
    if (doc.contains("outputs")) {
        const json& o = doc.at("outputs");
        require_object(o, "outputs", {"format", "path"});
        if (o.contains("format")) cfg.format = parse_format(text(o.at("format"), "outputs.format"));
        if (o.contains("path")) cfg.out_path = text(o.at("path"), "outputs.path");
    }
    if (doc.contains("checks")) {
        const json& c = doc.at("checks");
        if (!c.is_array()) throw ConfigError("checks: expected an array of suite names");
        cfg.checks.clear();
        for (const json& name : c) cfg.checks.push_back(text(name, "checks[]"));
    }
    if (doc.contains("oracle")) {
        const json& o = doc.at("oracle");
        require_object(o, "oracle",
                       {"enabled", "box_half_width", "step", "match_tolerance", "potential_smallness", "boundary",
                        "extrapolate"});
        if (o.contains("enabled")) {
            if (!o.at("enabled").is_boolean()) throw ConfigError("oracle.enabled: expected a boolean");
            cfg.oracle = o.at("enabled").get<bool>();
        }
        if (o.contains("box_half_width")) cfg.solver.box_half_width = number(o.at("box_half_width"), "oracle.box_half_width");
        if (o.contains("step")) cfg.solver.step = number(o.at("step"), "oracle.step");
        if (o.contains("match_tolerance"))
            cfg.solver.match_tolerance = number(o.at("match_tolerance"), "oracle.match_tolerance");
        if (o.contains("potential_smallness"))
            cfg.solver.potential_smallness = number(o.at("potential_smallness"), "oracle.potential_smallness");
        if (o.contains("boundary")) cfg.solver.boundary = parse_boundary(text(o.at("boundary"), "oracle.boundary"));
        if (o.contains("extrapolate")) {
            if (!o.at("extrapolate").is_boolean()) throw ConfigError("oracle.extrapolate: expected a boolean");
            cfg.solver.extrapolate = o.at("extrapolate").get<bool>();
        }
    }
    if (doc.contains("wavefunction")) {
        const json& w = doc.at("wavefunction");
        require_object(w, "wavefunction", {"x_range", "normalization"});
        if (w.contains("x_range")) cfg.x_values = range_from(w.at("x_range"), "wavefunction.x_range");
        if (w.contains("normalization"))
            cfg.normalization = parse_normalization(text(w.at("normalization"), "wavefunction.normalization"));
    }
    if (doc.contains("propagator")) {
        const json& p = doc.at("propagator");
        require_object(p, "propagator", {"tau", "points", "grid_points"});
        if (p.contains("tau")) cfg.tau = number(p.at("tau"), "propagator.tau");
        if (p.contains("points")) {
            const json& pts = p.at("points");
            if (!pts.is_array()) throw ConfigError("propagator.points: expected an array of [xf, xi]");
            cfg.points.clear();
            for (const json& pt : pts) {
                if (!pt.is_array() || pt.size() != 2) throw ConfigError("propagator.points[]: expected [xf, xi]");
                cfg.points.emplace_back(number(pt[0], "propagator.points[][0]"), number(pt[1], "propagator.points[][1]"));
            }
        }
        if (p.contains("grid_points")) {
            const json& n = p.at("grid_points");
            if (!n.is_number_integer() || n.get<long long>() < 0)
                throw ConfigError("propagator.grid_points: expected a non-negative integer");
            cfg.grid_points = n.get<std::size_t>();
        }
    }
}

}  // namespace

std::vector<double> parse_range(const std::string& spec)
{
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ConfigError("range '" + spec + "' must look like a:b:n");
    const double a = to_number(spec.substr(0, c1), "range start");
    const double b = to_number(spec.substr(c1 + 1, c2 - c1 - 1), "range stop");
    const double n_real = to_number(spec.substr(c2 + 1), "range count");
    if (!(n_real >= 1.0) || n_real != std::floor(n_real) || n_real > 1e7)
        throw ConfigError("range count in '" + spec + "' must be an integer in [1, 1e7]");
    const auto n = static_cast<std::size_t>(n_real);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (n > 1) out.back() = b;
    return out;
}

std::pair<double, double> parse_point(const std::string& spec)
{
    const auto c = spec.find(':');
    if (c == std::string::npos) throw ConfigError("point '" + spec + "' must look like xf:xi");
    return {to_number(spec.substr(0, c), "xf"), to_number(spec.substr(c + 1), "xi")};
}

void load_config_text(const std::string& text, RunConfig& cfg)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    apply_document(doc, cfg);
}

void load_config_file(const std::string& path, RunConfig& cfg)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    load_config_text(buf.str(), cfg);
}

void validate(const RunConfig& cfg)
{
    try {
        cfg.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (cfg.k_values.empty()) throw ConfigError("the k sweep is empty");
    for (double k : cfg.k_values)
        if (!std::isfinite(k) || k < 0.0) throw ConfigError("wavenumbers must be finite and >= 0");
    for (double x : cfg.x_values)
        if (!std::isfinite(x)) throw ConfigError("x grid values must be finite");
    if (!std::isfinite(cfg.tau) || !(cfg.tau > 0.0)) throw ConfigError("tau must be positive");
    for (const auto& [xf, xi] : cfg.points)
        if (!std::isfinite(xf) || !std::isfinite(xi)) throw ConfigError("propagator points must be finite");
    if (cfg.grid_points != 0 && cfg.grid_points < 200) throw ConfigError("grid needs at least 200 points (0 disables it)");
    if (!(cfg.solver.match_tolerance > 0.0)) throw ConfigError("oracle match tolerance must be positive");
}

Format parse_format(const std::string& s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw ConfigError("format must be csv or json, got '" + s + "'");
}

BoundaryModel parse_boundary(const std::string& s)
{
    if (s == "discrete") return BoundaryModel::discrete;
    if (s == "continuum") return BoundaryModel::continuum;
    throw ConfigError("boundary must be discrete or continuum, got '" + s + "'");
}

Normalization parse_normalization(const std::string& s)
{
    if (s == "energy") return Normalization::energy;
    if (s == "printed") return Normalization::printed;
    throw ConfigError("normalization must be energy or printed, got '" + s + "'");
}

}  // namespace coshbar::cli
