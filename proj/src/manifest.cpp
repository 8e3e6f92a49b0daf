// Copyright 2026 The gedkit Authors
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

#include "ged/manifest.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "ged/types.hpp"

namespace ged {

uint64_t fnv1a64(const std::string& data) {
  uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string digest_hex(const std::string& data) {
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx",
           static_cast<unsigned long long>(fnv1a64(data)));
  return std::string(buf);
}

std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for digesting", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return digest_hex(ss.str());
}

RunManifest::RunManifest(std::string subcommand)
    : subcommand_(std::move(subcommand)) {}

void RunManifest::set_config(nlohmann::json config) { config_ = std::move(config); }

void RunManifest::add_input(const std::string& path) {
  input_digests_[path] = digest_file(path);
}

void RunManifest::add_output(const std::string& path) {
  output_digests_[path] = digest_file(path);
}

void RunManifest::add_counter(const std::string& name, uint64_t value) {
  counters_[name] = value;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["format_version"] = kFormatVersion;
  j["subcommand"] = subcommand_;
  j["config"] = config_;
  j["config_hash"] = digest_hex(config_.dump());
  j["inputs"] = input_digests_;
  j["outputs"] = output_digests_;
  j["counters"] = counters_;
  const auto now = std::chrono::system_clock::now();
  j["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  return j;
}

void RunManifest::write_beside(const std::string& output_path) const {
  const std::string path = output_path + ".manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest", path);
  out << to_json().dump(2) << '\n';
}

}  // namespace ged
