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

#ifndef REINFLECT_UTF8_HPP_
#define REINFLECT_UTF8_HPP_

#include <string>
#include <string_view>

namespace reinflect::utf8 {

/// Strict decode to Unicode scalar values. Rejects overlong encodings,
/// surrogates, and values above U+10FFFF. `line` is forwarded into the
/// error for diagnostics.
std::u32string decode(std::string_view bytes, std::size_t line = 0);

std::string encode(std::u32string_view scalars);
std::string encode(char32_t scalar);

bool is_valid(std::string_view bytes);

/// Number of Unicode scalars in valid UTF-8.
std::size_t length(std::string_view bytes);

}  // namespace reinflect::utf8

#endif  // REINFLECT_UTF8_HPP_
