// Copyright 2026 The QSS Toolkit Authors
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

#ifndef QSS_ERRORS_HPP
#define QSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qss {

/// A requested construction is mathematically impossible (no-cloning
/// violations, parameter bounds, degenerate restrictions, ...).
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent external input (files, descriptors).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation would exceed the configured simulator resource caps.
struct SizeCapError : std::runtime_error {
    explicit SizeCapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested data does not exist (e.g. no codeword with the wanted support).
struct NotFoundError : std::runtime_error {
    explicit NotFoundError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qss

#endif
