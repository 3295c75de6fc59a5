#include "ptsb/io.hpp"

#include <cstdio>

namespace ptsb::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.params) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_double(row[i]);
    }
    out << "\n";
  }
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_json(std::ostream& out, const Table& table) {
  out << "{\n  \"params\": {";
  for (std::size_t i = 0; i < table.params.size(); ++i) {
    if (i) out << ",";
    out << "\n    \"" << json_escape(table.params[i].first) << "\": \""
        << json_escape(table.params[i].second) << "\"";
  }
  out << (table.params.empty() ? "" : "\n  ") << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ", ";
    out << "\"" << json_escape(table.columns[i]) << "\"";
  }
  out << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out << ",";
    out << "\n    [";
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) out << ", ";
      out << format_double(table.rows[r][i]);
    }
    out << "]";
  }
  out << (table.rows.empty() ? "" : "\n  ") << "]\n}\n";
}

}  // namespace ptsb::io
