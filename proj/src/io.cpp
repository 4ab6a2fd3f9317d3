#include "pacsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "pacsim/errors.hpp"

namespace pacsim {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string table_to_csv(const Table& table) {
    std::string out = "# units: " + table.units + "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += table.columns[c];
        out += c + 1 < table.columns.size() ? ',' : '\n';
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!std::isnan(row[c])) out += format_value(row[c]);
            out += c + 1 < row.size() ? ',' : '\n';
        }
    }
    return out;
}

std::string table_to_json(const Table& table) {
    nlohmann::json j;
    j["units"] = table.units;
    j["columns"] = table.columns;
    j["rows"] = table.rows;  // NaN serializes as null
    return j.dump() + "\n";
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParameterError("write_text: cannot open '" + path + "'");
    out << text;
}

}  // namespace pacsim
