#include "bintrans/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bintrans {

namespace {

constexpr std::string_view kCsvHeader = "m,value,abs_error,bound";

} // namespace

TableRow render_row(const PartialResult& row, int digits) {
    TableRow out;
    out.m = std::to_string(row.order);
    out.value = row.value.to_decimal(digits);
    if (row.reference_error)
        out.abs_error = abs(*row.reference_error).to_decimal(digits);
    if (row.proven_bound)
        out.bound = row.proven_bound->to_decimal(digits);
    return out;
}

std::string error_trend(const ConvergenceTable& table) {
    const auto& rows = table.rows();
    if (rows.size() < 2)
        return "non-monotone";
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!rows[i].reference_error || !rows[i - 1].reference_error)
            return "non-monotone";
        if (!(abs(*rows[i].reference_error) < abs(*rows[i - 1].reference_error)))
            return "non-monotone";
    }
    return "decreasing";
}

std::string to_csv(const ConvergenceTable& table, int digits) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& row : table.rows()) {
        const TableRow r = render_row(row, digits);
        out += r.m + ',' + r.value + ',' + r.abs_error + ',' + r.bound.value_or("") + '\n';
    }
    return out;
}

std::string to_json(const ConvergenceTable& table, int digits) {
    nlohmann::ordered_json doc;
    doc["formula"] = table.formula();
    doc["parameter"] = table.parameter() ? nlohmann::ordered_json(*table.parameter()) : nlohmann::ordered_json(nullptr);
    doc["digits"] = digits;
    doc["reference"] = table.reference().to_decimal(digits);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows()) {
        const TableRow r = render_row(row, digits);
        nlohmann::ordered_json obj;
        obj["m"] = r.m;
        obj["value"] = r.value;
        obj["abs_error"] = r.abs_error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.abs_error);
        obj["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["trend"] = error_trend(table);
    return doc.dump(2) + "\n";
}

std::vector<TableRow> parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::invalid_argument("CSV header must be '" + std::string(kCsvHeader) + "'");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (fields.size() != 4)
            throw std::invalid_argument("CSV row must have 4 fields: '" + line + "'");
        TableRow r{fields[0], fields[1], fields[2], std::nullopt};
        if (!fields[3].empty())
            r.bound = fields[3];
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace bintrans
