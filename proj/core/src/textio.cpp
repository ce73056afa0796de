#include "eegsp/textio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace eegsp {

std::string format_double(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);  // from_chars rejects a leading '+'
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return false;
  if (!std::isfinite(v)) return false;
  out = v;
  return true;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    auto field = comma == std::string_view::npos ? line.substr(start)
                                                 : line.substr(start, comma - start);
    fields.emplace_back(trim(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

void write_indexed_csv(const std::string& path, const std::string& header,
                       const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << header << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i << ',' << format_double(values[i]) << '\n';
  }
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace eegsp
