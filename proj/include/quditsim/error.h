// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITSIM_ERROR_H
#define QUDITSIM_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace quditsim {

/// Categories of failure raised by the library. Every public operation
/// reports errors by throwing `quditsim::Error` tagged with one of these.
enum class ErrorCode {
    InvalidDimension,
    UnsupportedDimension,
    Arity,
    Shape,
    Bounds,
    DimensionMismatch,
    DimensionConflict,
    MissingDimension,
    KeyCollision,
    Wiring,
    Validation,
    UnsupportedOp,
    Size,
    NothingToSample,
    InvalidArgument,
    Parse,
    Timeout,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// An error tied to a position in a circuit text file (1-based line and column).
class ParseError : public Error {
   public:
    ParseError(ErrorCode code, size_t line, size_t column, const std::string &message);

    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }
    /// Message without the "line:col:" prefix.
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    size_t line_;
    size_t column_;
    std::string detail_;
};

}  // namespace quditsim

#endif
