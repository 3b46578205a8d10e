/** Copyright 2026 The Signet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "signet/error.hpp"

namespace signet {

std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInvalidArgument:
      return "invalid_argument";
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kUniverse:
      return "universe";
    case ErrorCategory::kInsufficientData:
      return "insufficient_data";
    case ErrorCategory::kDegenerate:
      return "degenerate";
    case ErrorCategory::kIo:
      return "io";
  }
  return "unknown";
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kInvalidArgument:
      return 2;
    case ErrorCategory::kParse:
      return 3;
    case ErrorCategory::kUniverse:
      return 4;
    case ErrorCategory::kInsufficientData:
      return 5;
    case ErrorCategory::kDegenerate:
      return 6;
    case ErrorCategory::kIo:
      return 7;
  }
  return 1;
}

ParseError::ParseError(std::string file, std::uint64_t line,
                       const std::string& msg)
    : Error(ErrorCategory::kParse,
            file + ":" + std::to_string(line) + ": " + msg),
      file_(std::move(file)),
      line_(line) {}

}  // namespace signet
