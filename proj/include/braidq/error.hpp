// Copyright 2026 The braidq Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidq {

/// Operands disagree on qubit or strand count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An index (qubit site, Majorana label, generator) lies outside its range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed text. `position` is a 0-based character offset into the input.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

/// Input is well-formed but was not produced by the braiding pipeline.
struct MalformedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A dense computation was requested above the configured size limit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace braidq
