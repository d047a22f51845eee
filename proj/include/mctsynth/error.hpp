// Copyright 2026 The mctsynth Authors
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
#include <string_view>
#include <utility>

namespace mctsynth {

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateLine,
  BadRoles,
  OutOfRange,
  LineCollision,
  WidthLimitExceeded,
  ZeroMatrix,
  SyntaxError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is
/// stable and intended for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the circuit text parser. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(
      ErrorCode code, std::size_t line, std::string token,
      const std::string& message)
      : Error(code, message), line_(line), token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

}  // namespace mctsynth
