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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace signet {

/// Machine-readable failure class. The CLI maps each one to an exit code.
enum class ErrorCategory {
  kInvalidArgument,
  kParse,
  kUniverse,
  kInsufficientData,
  kDegenerate,
  kIo,
};

std::string_view category_name(ErrorCategory c);
int exit_code(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Parse failure tied to a physical line of an input file (1-based).
class ParseError : public Error {
 public:
  ParseError(std::string file, std::uint64_t line, const std::string& msg);

  const std::string& file() const noexcept { return file_; }
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::uint64_t line_;
};

}  // namespace signet
