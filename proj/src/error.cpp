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

#include "mctsynth/error.hpp"

namespace mctsynth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::DuplicateLine:
      return "DuplicateLine";
    case ErrorCode::BadRoles:
      return "BadRoles";
    case ErrorCode::OutOfRange:
      return "OutOfRange";
    case ErrorCode::LineCollision:
      return "LineCollision";
    case ErrorCode::WidthLimitExceeded:
      return "WidthLimitExceeded";
    case ErrorCode::ZeroMatrix:
      return "ZeroMatrix";
    case ErrorCode::SyntaxError:
      return "SyntaxError";
    case ErrorCode::ValidationError:
      return "ValidationError";
  }
  return "Unknown";
}

}  // namespace mctsynth
