#pragma once

// Deterministic table output: CSV with '#'-prefixed metadata lines, or a JSON
// mirror {"params": {...}, "columns": [...], "rows": [[...]]}.  Numbers are
// written with 17 significant digits so re-runs reproduce files bit for bit.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ptsb::io {

struct Table {
  std::vector<std::pair<std::string, std::string>> params;  // emitted in insertion order
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_double(double v);  // shortest-17-significant-digit form

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

}  // namespace ptsb::io
