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

#include "reinflect/errors.hpp"

namespace reinflect {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine:
      return "MalformedLine";
    case ErrorKind::EmptyField:
      return "EmptyField";
    case ErrorKind::InvalidUtf8:
      return "InvalidUtf8";
    case ErrorKind::DuplicateCategory:
      return "DuplicateCategory";
    case ErrorKind::MissingForm:
      return "MissingForm";
    case ErrorKind::TooSmall:
      return "TooSmall";
    case ErrorKind::CapTooSmall:
      return "CapTooSmall";
    case ErrorKind::EmptyAlphabet:
      return "EmptyAlphabet";
    case ErrorKind::NothingHallucinable:
      return "NothingHallucinable";
    case ErrorKind::SizeMismatch:
      return "SizeMismatch";
    case ErrorKind::EmptySet:
      return "EmptySet";
    case ErrorKind::MissingLanguage:
      return "MissingLanguage";
    case ErrorKind::BadSchema:
      return "BadSchema";
    case ErrorKind::BadModel:
      return "BadModel";
    case ErrorKind::BadConfig:
      return "BadConfig";
    case ErrorKind::IoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace reinflect
