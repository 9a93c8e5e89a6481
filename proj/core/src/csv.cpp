#include "optobec/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace optobec {

namespace {

const std::vector<std::string> canonical_columns = {
    "stability", "c_s", "E_mc", "E_ac", "E_ma",
    "eps_mc", "eps_ac", "eps_ma", "error"};

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);  // 12 significant digits
    return buf;
}

std::string cell(const PointResult& row, const std::string& column) {
    auto opt = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string();
    };
    if (column == "stability") return row.stability;
    if (column == "c_s") return format_number(row.c_s);
    if (column == "E_mc") return opt(row.e_mc);
    if (column == "E_ac") return opt(row.e_ac);
    if (column == "E_ma") return opt(row.e_ma);
    if (column == "eps_mc") return opt(row.eps_mc);
    if (column == "eps_ac") return opt(row.eps_ac);
    if (column == "eps_ma") return opt(row.eps_ma);
    if (column == "error") return row.error;
    throw UnknownQuantity("unknown CSV column '" + column + "'");
}

std::vector<std::string> selected_columns(const SweepResult& result) {
    if (result.outputs.empty()) return canonical_columns;
    std::vector<std::string> cols;
    for (const auto& name : canonical_columns) {
        if (std::find(result.outputs.begin(), result.outputs.end(), name) !=
            result.outputs.end())
            cols.push_back(name);
    }
    return cols;
}

} // namespace

void emit_csv(const SweepResult& result, std::ostream& out) {
    const auto cols = selected_columns(result);
    out << result.axis1_name;
    if (result.axis2_name) out << ',' << *result.axis2_name;
    for (const auto& c : cols) out << ',' << c;
    out << '\n';
    for (const auto& row : result.rows) {
        out << (row.axis1_value ? format_number(*row.axis1_value) : std::string());
        if (result.axis2_name)
            out << ',' << (row.axis2_value ? format_number(*row.axis2_value) : std::string());
        for (const auto& c : cols) out << ',' << cell(row, c);
        out << '\n';
    }
    if (!out) throw IoFailure("CSV write failed");
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    emit_csv(result, out);
}

CsvTable parse_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) cells.push_back(field);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

CsvTable parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    return parse_csv(in);
}

} // namespace optobec
