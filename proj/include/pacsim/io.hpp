#pragma once

#include <string>
#include <vector>

namespace pacsim {

/// All floating-point output uses 12 significant digits so that repeated
/// runs are byte-identical.
std::string format_value(double v);

/// A plot-ready table: fixed column names, rows of numeric cells (NaN =
/// missing), a units line emitted as a leading comment in CSV and a "units"
/// string in JSON.
struct Table {
    std::string units;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string table_to_csv(const Table& table);
std::string table_to_json(const Table& table);

/// Writes to the path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace pacsim
