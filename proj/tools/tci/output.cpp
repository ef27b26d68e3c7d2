#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tci::cli {

void Table::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size()) {
        throw std::logic_error("Table: row width does not match the header");
    }
    rows.push_back(std::move(cells));
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

namespace {

std::string cell_to_csv(const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell)) {
        return "";
    }
    if (const double* num = std::get_if<double>(&cell)) {
        return format_number(*num);
    }
    if (const bool* flag = std::get_if<bool>(&cell)) {
        return *flag ? "true" : "false";
    }
    return csv_escape(std::get<std::string>(cell));
}

Json cell_to_json(const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell)) {
        return nullptr;
    }
    if (const double* num = std::get_if<double>(&cell)) {
        return *num;
    }
    if (const bool* flag = std::get_if<bool>(&cell)) {
        return *flag;
    }
    return std::get<std::string>(cell);
}

} // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += cell_to_csv(row[i]);
        }
        out += '\n';
    }
    return out;
}

Json rows_to_json(const Table& table) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json obj = Json::object();
        for (size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = cell_to_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

Json make_envelope(const std::string& command, std::uint64_t seed, Json parameters) {
    Json doc = Json::object();
    doc["command"] = command;
    doc["seed"] = seed;
    doc["parameters"] = std::move(parameters);
    return doc;
}

void attach_table(Json& doc, const Table& table) {
    doc["columns"] = table.columns;
    doc["rows"] = rows_to_json(table);
}

void emit(const OutputOpts& opts, const Table& table, const Json& doc) {
    std::string payload = opts.format == "json" ? doc.dump(2) + "\n" : to_csv(table);
    if (opts.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + opts.out);
    }
    file << payload;
}

} // namespace tci::cli
