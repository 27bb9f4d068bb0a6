#pragma once

#include "moran/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace moran {

enum class ColumnType { Int, Rational, Float, Text };

/// monostate is an absent value: an empty CSV field, null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, Rational, double, std::string>;

struct Column {
    std::string name;
    ColumnType type;

    friend bool operator==(const Column&, const Column&) = default;
};

struct SummaryField {
    std::string name;
    ColumnType type;
    Cell value;

    friend bool operator==(const SummaryField&, const SummaryField&) = default;
};

/// One command's result. Column order is part of the format and only changes
/// together with format_version.
struct OutputRecord {
    static constexpr int kFormatVersion = 1;

    std::string command;
    int format_version = kFormatVersion;
    std::vector<std::pair<std::string, std::string>> parameters;  // in emission order
    std::vector<SummaryField> summary;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add_column(std::string name, ColumnType type) { columns.push_back({std::move(name), type}); }
    void add_parameter(std::string name, std::string value) {
        parameters.emplace_back(std::move(name), std::move(value));
    }
    void add_summary(std::string name, ColumnType type, Cell value) {
        summary.push_back({std::move(name), type, std::move(value)});
    }

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class OutputFormat { Csv, Json };

std::string type_name(ColumnType type);
/// Throws std::invalid_argument for an unknown name.
ColumnType parse_type_name(const std::string& name);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Throws std::invalid_argument when a cell does not match its column type
/// or a row has the wrong width.
void write_csv(const OutputRecord& record, std::ostream& out);
void write_json(const OutputRecord& record, std::ostream& out);
void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out);

/// Inverses of the writers. Throw std::invalid_argument on malformed input.
OutputRecord read_csv(const std::string& text);
OutputRecord read_json(const std::string& text);

}  // namespace moran
