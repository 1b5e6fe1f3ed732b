/*
   Copyright 2026 The lrsmash Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lrsmash {

/// Base class for all lrsmash errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic between elements of different ground fields.
class FieldMismatch : public Error {
   public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

/// Composition/label lookup where the involved spaces do not match.
class SpaceMismatch : public Error {
   public:
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/// Permutation whose arity does not match the factor count.
class ArityMismatch : public Error {
   public:
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

/// A constructor was invoked on inputs that fail its prerequisite checks.
class PrerequisiteError : public Error {
   public:
    PrerequisiteError(const std::string& what, std::vector<std::string> failing)
        : Error(what), failing_checks(std::move(failing)) {}
    std::vector<std::string> failing_checks;
};

/// Structure-file syntax or resolution problem, with source position.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Invariant violation inside the library itself.
class InternalError : public Error {
   public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace lrsmash
