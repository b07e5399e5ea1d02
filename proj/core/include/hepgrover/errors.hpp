// Copyright 2026 The hepgrover Authors
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

namespace hepgrover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested register is larger than the simulator is willing to allocate.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// A gate, circuit, problem or histogram violates its structural contract.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Iteration count requested for a search with no marked states.
class UndefinedSearchError : public Error {
  public:
    using Error::Error;
};

/// Malformed configuration (noise profile values, CLI options).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Text input that does not follow its grammar. Line and column are 1-based;
/// column 0 means "whole line".
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t line,
               std::size_t column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string &message, std::size_t line,
                              std::size_t column) {
        std::string out = "line " + std::to_string(line);
        if (column != 0) {
            out += ", column " + std::to_string(column);
        }
        return out + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace hepgrover
