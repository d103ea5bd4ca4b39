// Copyright 2026 The oakit Authors
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

#include <stdexcept>
#include <string>

namespace oakit {

/// Invalid arguments: out-of-range parameters, shape mismatches, unmet preconditions.
class ParameterError : public std::invalid_argument {
   public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

/// Malformed "moa v1" text.
class FormatError : public std::runtime_error {
   public:
    FormatError(const std::string &what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// A generated object failed the exact oracle it is required to pass.
class VerificationError : public std::runtime_error {
   public:
    explicit VerificationError(const std::string &what) : std::runtime_error(what) {}
};

/// A construction needs a seed array that is neither embedded nor generatable.
class MissingSeedError : public std::runtime_error {
   public:
    explicit MissingSeedError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace oakit
