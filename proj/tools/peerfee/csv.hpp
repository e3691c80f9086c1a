#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace peerfee::app {

// Nine significant digits, '.' separator, no negative zero. "nan"/"inf"
// for non-finite values.
std::string format_number(double v);

// RFC 4180 quoting when the field contains ',', '"' or a newline.
std::string csv_field(std::string_view s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;  // throws std::out_of_range
  void write(std::ostream& out) const;
  std::string str() const;
};

// Parses text produced by CsvTable::write (used by the figure checks).
CsvTable parse_csv(std::string_view text);

}  // namespace peerfee::app
