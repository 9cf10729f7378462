#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tra::cli {

using Cell = std::variant<long long, double, std::string>;

/// Result table: ordered metadata, column names and rows.
struct Table {
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal string that reads back to the same double.
std::string format_number(double v);

/// Metadata as "# key: value" lines, then the header row and the data rows.
/// Comma separated, LF line endings.
std::string to_csv(const Table& table);

/// One object {"metadata": {...}, "columns": [...], "rows": [[...], ...]}.
/// Non-finite numbers are written as null.
std::string to_json(const Table& table);

}  // namespace tra::cli
