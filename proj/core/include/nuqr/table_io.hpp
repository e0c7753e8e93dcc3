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

#pragma once

#include <string>
#include <string_view>

#include "nuqr/sweep.hpp"

namespace nuqr {

inline constexpr int kSignificantDigits = 12;

/// Shortest general-format text with 12 significant digits, '.' separator,
/// independent of the global locale. Negative zero prints as "0".
std::string format_number(double value);

/// Header line, then one line per row. Throws std::invalid_argument when
/// the table has no rows.
std::string emit_csv(const ResultTable& table);

/// Array of objects keyed by column name, numbers rounded as in format_number.
std::string emit_json(const ResultTable& table);

/// Inverse of emit_csv. Throws ConfigError on malformed input.
ResultTable parse_csv(std::string_view text);

}  // namespace nuqr
