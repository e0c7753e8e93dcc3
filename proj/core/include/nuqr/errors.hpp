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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nuqr {

/// A parameter lies outside its physical range (negative energy, tau > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An input does not have the shape an operation requires, e.g. a closed
/// form applied to a matrix outside the X-state family.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed configuration text. `line()` is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nuqr
