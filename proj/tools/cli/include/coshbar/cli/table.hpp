#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "coshbar/cli/config.hpp"

namespace coshbar::cli {

// A cell is empty, a number, or free text (the flag column).
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV: header row, numbers as %.17g, LF line endings, empty cells left blank.
/// JSON: an array of objects keyed by column name, empty cells as null.
void write_table(std::ostream& out, const Table& table, Format format);

/// %.17g with "nan", "inf" and "-inf" spelled out.
[[nodiscard]] std::string format_number(double v);

}  // namespace coshbar::cli
