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

#include "reinflect/manifest.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reinflect/errors.hpp"
#include "reinflect/rng.hpp"

namespace reinflect {

std::string RunManifest::digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::uint64_t h = fnv1a64(buf.str());
  char hex[19];
  std::snprintf(hex, sizeof hex, "0x%016llx",
                static_cast<unsigned long long>(h));
  return hex;
}

void RunManifest::write() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  nlohmann::ordered_json ins = nlohmann::ordered_json::array();
  for (const auto& path : inputs) {
    ins.push_back({{"path", path}, {"fnv1a64", digest_file(path)}});
  }
  j["inputs"] = std::move(ins);
  j["output"] = output;

  std::string path = output + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace reinflect
