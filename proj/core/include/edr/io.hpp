#pragma once

#include <optional>
#include <string>
#include <vector>

namespace edr {

/// Shortest round-trip decimal representation of a double. Locale-free and
/// deterministic; all file output goes through this so repeated runs are
/// byte-identical.
std::string format_double(double value);

/// One CSV cell: numbers via format_double, absent optionals as empty cells.
std::string csv_cell(double value);
std::string csv_cell(const std::optional<double>& value);

/// Joins cells with commas and a trailing newline.
std::string csv_row(const std::vector<std::string>& cells);

/// Writes text to a file, throwing Error{io} on failure. Parent directory
/// must exist.
void write_text_file(const std::string& path, const std::string& contents);

/// Reads an entire file, throwing Error{io} when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace edr
