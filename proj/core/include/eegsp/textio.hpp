#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eegsp {

// File-level failures (missing path, unreadable/unwritable file, malformed
// input data). The CLI maps these to exit code 2; everything else is a
// pipeline failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest decimal string that round-trips back to the same double.
// All CSV/JSON emitters go through this so reruns are byte-identical.
std::string format_double(double value);

// Strip leading/trailing whitespace (including CR from CRLF input).
std::string_view trim(std::string_view s);

// Parse a real number, rejecting trailing garbage and non-finite values.
// Returns false on failure.
bool parse_double(std::string_view s, double& out);

// Split one CSV line on commas. No quoting support; fields are trimmed.
std::vector<std::string> split_csv_line(std::string_view line);

// Write a two-column CSV ("<header>\n<index>,<value>\n..." with indices 0..n-1).
void write_indexed_csv(const std::string& path, const std::string& header,
                       const std::vector<double>& values);

}  // namespace eegsp
