#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "optobec/sweep.hpp"

namespace optobec {

/// Column layout: axis value(s), then the selected quantity columns in the
/// canonical order stability, c_s, E_mc, E_ac, E_ma, eps_mc, eps_ac, eps_ma,
/// error. Numbers carry 12 significant digits; cells that were not computed
/// stay empty. Newline-terminated UTF-8.
void emit_csv(const SweepResult& result, std::ostream& out);
void emit_csv(const SweepResult& result, const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Strict parser for the dialect emit_csv writes (no quoting, no embedded
/// separators). Round-trips emitted files cell-exactly.
CsvTable parse_csv(std::istream& in);
CsvTable parse_csv_file(const std::string& path);

} // namespace optobec
