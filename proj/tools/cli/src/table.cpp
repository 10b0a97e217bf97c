#include "coshbar/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace coshbar::cli {

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_table(std::ostream& out, const Table& table, Format format)
{
    if (format == Format::csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                if (const auto* d = std::get_if<double>(&row[c])) out << format_number(*d);
                else if (const auto* s = std::get_if<std::string>(&row[c])) out << csv_escape(*s);
            }
            out << '\n';
        }
        return;
    }

    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& key = table.columns[c];
            if (const auto* d = std::get_if<double>(&row[c])) {
                // JSON has no NaN/Inf literals; those degrade to their text form
                if (std::isfinite(*d)) obj[key] = *d;
                else obj[key] = format_number(*d);
            } else if (const auto* s = std::get_if<std::string>(&row[c])) {
                obj[key] = *s;
            } else {
                obj[key] = nullptr;
            }
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace coshbar::cli
