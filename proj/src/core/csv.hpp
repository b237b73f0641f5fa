// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCMI_CORE_CSV_HPP_
#define GCMI_CORE_CSV_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace gcmi {

// Shortest decimal form that round-trips through strtod ("%.17g"),
// "inf"/"-inf", and "NA" for NaN.
inline std::string FormatReal(double x) {
  if (std::isnan(x)) return "NA";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline std::string FormatReal(const std::optional<double>& x) {
  return x ? FormatReal(*x) : "NA";
}

// Inverse of FormatReal. "NA" parses to NaN.
inline double ParseReal(std::string_view s) {
  if (s == "NA") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    Fail(ErrorCode::kParseError, "bad number `" + tmp + "`");
  }
  return v;
}

inline std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r') {
    out.back().pop_back();
  }
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path)
      : path_(path), out_(path, std::ios::binary) {
    if (!out_) Fail(ErrorCode::kIoError, "cannot write " + path.string());
  }

  void Row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) Fail(ErrorCode::kIoError, "write failed: " + path_.string());
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Header row plus data rows of a CSV file.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t Column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    Fail(ErrorCode::kParseError, "missing column `" + std::string(name) + "`");
  }
};

inline CsvTable ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = SplitCsvLine(line);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != t.header.size()) {
        Fail(ErrorCode::kParseError,
             path.string() + ": row has " + std::to_string(cells.size()) +
                 " cells, header has " + std::to_string(t.header.size()));
      }
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace gcmi

#endif  // GCMI_CORE_CSV_HPP_
