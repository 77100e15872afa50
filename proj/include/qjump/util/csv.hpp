#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qjump/util/error.hpp"

namespace qjump {

// CSV writer: dot-decimal, header row, optional leading '#' comment lines.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header,
            const std::vector<std::string>& comments = {}) {
    out_.open(path, std::ios::binary);
    if (!out_) throw ConfigError("cannot open CSV for writing: " + path);
    for (const auto& c : comments) out_ << "# " << c << "\n";
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ",";
      out_ << header[i];
    }
    out_ << "\n";
  }

  void row(const std::vector<double>& values) {
    char buf[32];
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      out_ << buf;
    }
    out_ << "\n";
  }

  void raw_row(const std::string& line) { out_ << line << "\n"; }
  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

// Reads a numeric CSV produced by CsvWriter. Skips '#' comment lines and
// reports parse failures with the 1-based line number.
inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open CSV: " + path);
  CsvTable table;
  std::string line;
  long lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      table.header = cells;
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      try {
        row.push_back(std::stod(c));
      } catch (const std::exception&) {
        throw ConfigError("CSV parse error at " + path + ":" +
                          std::to_string(lineno) + ": '" + c + "'");
      }
    }
    if (row.size() != table.header.size())
      throw ConfigError("CSV column count mismatch at " + path + ":" +
                        std::to_string(lineno));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ConfigError("CSV has no header row: " + path);
  return table;
}

}  // namespace qjump
