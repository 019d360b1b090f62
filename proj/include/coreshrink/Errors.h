/*
 *  Copyright (C) 2026  The coreshrink authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef CORESHRINK_ERRORS_H
#define CORESHRINK_ERRORS_H

#include <stdexcept>
#include <string>

namespace coreshrink {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed in-memory data: dangling atom id, broken invariant.
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// Input exceeds an enumeration or arithmetic size guard.
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// The requested construct is outside this component's fragment.
struct UnsupportedFeatureError : Error {
    explicit UnsupportedFeatureError(const std::string& msg) : Error(msg) {}
};

struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& msg)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
};

} // namespace coreshrink

#endif
