/*
 * Copyright 2026 The Reinflect Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef REINFLECT_ERRORS_HPP_
#define REINFLECT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace reinflect {

enum class ErrorKind {
  MalformedLine,
  EmptyField,
  InvalidUtf8,
  DuplicateCategory,
  MissingForm,
  TooSmall,
  CapTooSmall,
  EmptyAlphabet,
  NothingHallucinable,
  SizeMismatch,
  EmptySet,
  MissingLanguage,
  BadSchema,
  BadModel,
  BadConfig,
  IoError,
};

const char* error_kind_name(ErrorKind kind);

/// Data or configuration error. `line()` is 1-based when the error is tied
/// to a specific input line, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::size_t line = 0)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace reinflect

#endif  // REINFLECT_ERRORS_HPP_
