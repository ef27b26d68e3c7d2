#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace tci::cli {

using Json = nlohmann::ordered_json;

/// One table cell: empty (missing value), a number, a flag, or text. Text
/// must be passed as std::string, never as a literal: a raw char pointer
/// would convert to bool first.
using Cell = std::variant<std::monostate, double, bool, std::string>;

/// Rectangular dataset with named columns; the unit every subcommand emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

/// Numbers are printed at six significant digits in CSV; JSON carries full
/// precision.
std::string format_number(double v);

/// RFC-4180 quoting: fields containing commas, quotes, or line breaks are
/// quoted and embedded quotes doubled; everything else passes through.
std::string csv_escape(const std::string& field);

/// Header row plus one line per data row, '\n' separated.
std::string to_csv(const Table& table);

/// Rows as an array of column-keyed objects; empty cells become null.
Json rows_to_json(const Table& table);

/// Starts the JSON document every subcommand emits: command name, seed, and
/// the echoed parameters, in that order.
Json make_envelope(const std::string& command, std::uint64_t seed, Json parameters);

/// Appends the table to `doc` under "columns"/"rows".
void attach_table(Json& doc, const Table& table);

struct OutputOpts {
    std::string format = "csv"; ///< csv | json
    std::string out;            ///< output path, empty = stdout
};

/// Writes the table (csv) or the document (json) to opts.out or stdout.
void emit(const OutputOpts& opts, const Table& table, const Json& doc);

} // namespace tci::cli
