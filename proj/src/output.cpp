#include "moran/output.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace moran {

namespace {

using Json = nlohmann::ordered_json;

const char* const kTypeNames[] = {"int", "rational", "float", "text"};

bool matches(const Cell& cell, ColumnType type) {
    switch (type) {
        case ColumnType::Int: return std::holds_alternative<std::int64_t>(cell);
        case ColumnType::Rational: return std::holds_alternative<Rational>(cell);
        case ColumnType::Float: return std::holds_alternative<double>(cell);
        case ColumnType::Text: return std::holds_alternative<std::string>(cell);
    }
    return false;
}

void check_cell(const Cell& cell, ColumnType type, const std::string& name) {
    if (!std::holds_alternative<std::monostate>(cell) && !matches(cell, type)) {
        throw std::invalid_argument("value of '" + name + "' does not match its declared type " + type_name(type));
    }
}

void check_shape(const OutputRecord& record) {
    for (const auto& f : record.summary) check_cell(f.value, f.type, f.name);
    for (const auto& row : record.rows) {
        if (row.size() != record.columns.size()) {
            throw std::invalid_argument("row width " + std::to_string(row.size()) + " differs from " +
                                        std::to_string(record.columns.size()) + " columns");
        }
        for (std::size_t i = 0; i < row.size(); ++i) check_cell(row[i], record.columns[i].type, record.columns[i].name);
    }
}

Rational parse_exact(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    r.canonicalize();
    return r;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
    return v;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("malformed float '" + s + "'");
    return v;
}

// ---- CSV ----

void require_single_line(const std::string& s, const std::string& what) {
    if (s.find_first_of("\r\n") != std::string::npos) throw std::invalid_argument(what + " contains a line break");
}

std::string quote_if_needed(const std::string& s) {
    if (!s.empty() && s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, Rational>) {
                return to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                require_single_line(v, "text value");
                return quote_if_needed(v);
            }
        },
        cell);
}

struct Field {
    std::string text;
    bool quoted = false;
};

// Splits one CSV line; quoted fields may not span lines.
std::vector<Field> split_csv(const std::string& line) {
    std::vector<Field> fields(1);
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back().text += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                fields.back().text += c;
            }
        } else if (c == '"') {
            in_quotes = true;
            fields.back().quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back().text += c;
        }
    }
    if (in_quotes) throw std::invalid_argument("unterminated quote in CSV line");
    return fields;
}

Cell cell_from_field(const Field& f, ColumnType type) {
    if (f.text.empty() && !f.quoted) return std::monostate{};
    switch (type) {
        case ColumnType::Int: return parse_int(f.text);
        case ColumnType::Rational: return parse_exact(f.text);
        case ColumnType::Float: return parse_double(f.text);
        case ColumnType::Text: return f.text;
    }
    throw std::logic_error("unknown column type");
}

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos) throw std::invalid_argument("expected '" + std::string(1, sep) + "' in '" + s + "'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

// ---- JSON ----

Json json_cell(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, Rational>) {
                return to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                // JSON has no literal for these
                if (!std::isfinite(v)) return format_double(v);
                return v;
            } else {
                return v;
            }
        },
        cell);
}

Cell cell_from_json(const Json& j, ColumnType type) {
    if (j.is_null()) return std::monostate{};
    switch (type) {
        case ColumnType::Int:
            if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
            return j.get<std::int64_t>();
        case ColumnType::Rational:
            if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
            return parse_exact(j.get<std::string>());
        case ColumnType::Float:
            if (j.is_string()) return parse_double(j.get<std::string>());
            if (!j.is_number()) throw std::invalid_argument("expected a number, got " + j.dump());
            return j.get<double>();
        case ColumnType::Text:
            if (!j.is_string()) throw std::invalid_argument("expected a string, got " + j.dump());
            return j.get<std::string>();
    }
    throw std::logic_error("unknown column type");
}

}  // namespace

std::string type_name(ColumnType type) { return kTypeNames[static_cast<int>(type)]; }

ColumnType parse_type_name(const std::string& name) {
    for (int i = 0; i < 4; ++i) {
        if (name == kTypeNames[i]) return static_cast<ColumnType>(i);
    }
    throw std::invalid_argument("unknown column type '" + name + "'");
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

// #command=<name>
// #format_version=<int>
// #param:<name>=<value>        one per parameter
// #summary:<name>:<type>=<value>
// #types=<type>,...
// <header row>
// <data rows>
void write_csv(const OutputRecord& record, std::ostream& out) {
    check_shape(record);
    require_single_line(record.command, "command");
    out << "#command=" << record.command << '\n';
    out << "#format_version=" << record.format_version << '\n';
    for (const auto& [k, v] : record.parameters) {
        require_single_line(k + v, "parameter " + k);
        out << "#param:" << k << '=' << v << '\n';
    }
    for (const auto& f : record.summary) {
        out << "#summary:" << f.name << ':' << type_name(f.type) << '=' << csv_cell(f.value) << '\n';
    }
    out << "#types=";
    for (std::size_t i = 0; i < record.columns.size(); ++i) out << (i ? "," : "") << type_name(record.columns[i].type);
    out << '\n';
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
        out << (i ? "," : "") << quote_if_needed(record.columns[i].name);
    }
    out << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void write_json(const OutputRecord& record, std::ostream& out) {
    check_shape(record);
    Json j;
    j["command"] = record.command;
    j["format_version"] = record.format_version;
    j["parameters"] = Json::object();
    for (const auto& [k, v] : record.parameters) j["parameters"][k] = v;
    j["summary"] = Json::array();
    for (const auto& f : record.summary) {
        j["summary"].push_back({{"name", f.name}, {"type", type_name(f.type)}, {"value", json_cell(f.value)}});
    }
    j["columns"] = Json::array();
    for (const auto& c : record.columns) j["columns"].push_back({{"name", c.name}, {"type", type_name(c.type)}});
    j["rows"] = Json::array();
    for (const auto& row : record.rows) {
        Json r = Json::array();
        for (const auto& cell : row) r.push_back(json_cell(cell));
        j["rows"].push_back(std::move(r));
    }
    out << j.dump(2) << '\n';
}

void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv) {
        write_csv(record, out);
    } else {
        write_json(record, out);
    }
}

OutputRecord read_csv(const std::string& text) {
    OutputRecord record;
    record.format_version = 0;
    std::istringstream in(text);
    std::string line;
    std::vector<ColumnType> types;
    bool have_types = false;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!have_header && line.starts_with('#')) {
            auto [key, value] = split_once(line.substr(1), '=');
            if (key == "command") {
                record.command = value;
            } else if (key == "format_version") {
                record.format_version = static_cast<int>(parse_int(value));
            } else if (key.starts_with("param:")) {
                record.add_parameter(key.substr(6), value);
            } else if (key.starts_with("summary:")) {
                auto [name, type] = split_once(key.substr(8), ':');
                const ColumnType t = parse_type_name(type);
                auto fields = split_csv(value);
                if (fields.size() != 1) throw std::invalid_argument("summary value of '" + name + "' has a comma");
                record.add_summary(name, t, cell_from_field(fields[0], t));
            } else if (key == "types") {
                if (!value.empty()) {
                    for (const auto& f : split_csv(value)) types.push_back(parse_type_name(f.text));
                }
                have_types = true;
            } else {
                throw std::invalid_argument("unknown CSV header key '" + key + "'");
            }
            continue;
        }
        if (!have_types) throw std::invalid_argument("CSV column types line missing");
        if (!have_header) {
            auto names = line.empty() ? std::vector<Field>{} : split_csv(line);
            if (names.size() != types.size()) throw std::invalid_argument("header width differs from #types");
            for (std::size_t i = 0; i < names.size(); ++i) record.add_column(names[i].text, types[i]);
            have_header = true;
            continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != types.size()) throw std::invalid_argument("row width differs from header: " + line);
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) row.push_back(cell_from_field(fields[i], types[i]));
        record.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument("CSV header row missing");
    return record;
}

OutputRecord read_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    try {
        OutputRecord record;
        record.command = j.at("command").get<std::string>();
        record.format_version = j.at("format_version").get<int>();
        for (const auto& [k, v] : j.at("parameters").items()) record.add_parameter(k, v.get<std::string>());
        for (const auto& f : j.at("summary")) {
            const ColumnType t = parse_type_name(f.at("type").get<std::string>());
            record.add_summary(f.at("name").get<std::string>(), t, cell_from_json(f.at("value"), t));
        }
        for (const auto& c : j.at("columns")) {
            record.add_column(c.at("name").get<std::string>(), parse_type_name(c.at("type").get<std::string>()));
        }
        for (const auto& r : j.at("rows")) {
            if (r.size() != record.columns.size()) throw std::invalid_argument("row width differs from columns");
            std::vector<Cell> row;
            for (std::size_t i = 0; i < r.size(); ++i) row.push_back(cell_from_json(r[i], record.columns[i].type));
            record.rows.push_back(std::move(row));
        }
        return record;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("unexpected JSON layout: ") + e.what());
    }
}

}  // namespace moran
