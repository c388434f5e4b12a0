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

#ifndef REINFLECT_MANIFEST_HPP_
#define REINFLECT_MANIFEST_HPP_

#include <map>
#include <string>
#include <vector>

namespace reinflect {

inline constexpr const char* kToolName = "reinflect";
inline constexpr const char* kToolVersion = "0.1.0";

/// Record of one command invocation: effective configuration (seeds
/// included), input content digests, and the output it produced. Re-running
/// the recorded command reproduces the output byte for byte.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<std::string> inputs;  // paths; digests computed on write
  std::string output;

  /// Writes `<output>.manifest.json`.
  void write() const;

  static std::string digest_file(const std::string& path);  // fnv1a64 hex
};

}  // namespace reinflect

#endif  // REINFLECT_MANIFEST_HPP_
