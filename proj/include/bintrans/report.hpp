#pragma once

// Text renderings of convergence tables: CSV with header m,value,abs_error,bound
// and JSON with every number as a decimal string.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bintrans/constants.hpp"

namespace bintrans {

/// One rendered row, all fields already decimal text.
struct TableRow {
    std::string m;
    std::string value;
    std::string abs_error;              // empty when the formula has no reference
    std::optional<std::string> bound;   // proven bound, when one exists

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow render_row(const PartialResult& row, int digits);

/// "decreasing" when abs_error strictly decreases row to row,
/// "non-monotone" otherwise (and for fewer than two rows).
std::string error_trend(const ConvergenceTable& table);

std::string to_csv(const ConvergenceTable& table, int digits);
std::string to_json(const ConvergenceTable& table, int digits);

/// Parses text produced by to_csv. Throws std::invalid_argument on a bad
/// header or a row without four fields.
std::vector<TableRow> parse_csv(std::string_view text);

} // namespace bintrans
