#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace peerfee::app {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

void CsvTable::write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << csv_field(fields[i]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string CsvTable::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool first = true;
  auto finish = [&] {
    record.push_back(std::move(field));
    field.clear();
    if (first) t.header = std::move(record);
    else t.rows.push_back(std::move(record));
    record.clear();
    first = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      finish();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (!field.empty() || !record.empty()) finish();
  return t;
}

}  // namespace peerfee::app
