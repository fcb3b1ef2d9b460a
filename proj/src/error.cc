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

#include "quditsim/error.h"

namespace quditsim {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDimension:
            return "invalid-dimension";
        case ErrorCode::UnsupportedDimension:
            return "unsupported-dimension";
        case ErrorCode::Arity:
            return "arity";
        case ErrorCode::Shape:
            return "shape";
        case ErrorCode::Bounds:
            return "bounds";
        case ErrorCode::DimensionMismatch:
            return "dimension-mismatch";
        case ErrorCode::DimensionConflict:
            return "dimension-conflict";
        case ErrorCode::MissingDimension:
            return "missing-dimension";
        case ErrorCode::KeyCollision:
            return "key-collision";
        case ErrorCode::Wiring:
            return "wiring";
        case ErrorCode::Validation:
            return "validation";
        case ErrorCode::UnsupportedOp:
            return "unsupported-op";
        case ErrorCode::Size:
            return "size";
        case ErrorCode::NothingToSample:
            return "nothing-to-sample";
        case ErrorCode::InvalidArgument:
            return "invalid-argument";
        case ErrorCode::Parse:
            return "parse";
        case ErrorCode::Timeout:
            return "timeout";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
}

ParseError::ParseError(ErrorCode code, size_t line, size_t column, const std::string &message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {
}

}  // namespace quditsim
