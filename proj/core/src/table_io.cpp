// Copyright 2026 The nuqr Authors
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

#include "nuqr/table_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                   : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double rounded(double value) {
  const std::string text = format_number(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

void require_rows(const ResultTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("empty result: nothing to emit");
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, kSignificantDigits);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

std::string emit_csv(const ResultTable& table) {
  require_rows(table);
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const ResultTable& table) {
  require_rows(table);
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = rounded(row[i]);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

ResultTable parse_csv(std::string_view text) {
  ResultTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split(line, ',');
    if (table.columns.empty()) {
      for (auto f : fields) table.columns.emplace_back(f);
      continue;
    }
    if (fields.size() != table.columns.size()) throw ConfigError("wrong field count", line_no);
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ConfigError("malformed number '" + std::string(f) + "'", line_no);
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw ConfigError("missing CSV header");
  return table;
}

}  // namespace nuqr
