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

#ifndef GED_MANIFEST_HPP
#define GED_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace ged {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFormatVersion = "1";

/// FNV-1a 64-bit digest, hex-encoded.
uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);
std::string digest_file(const std::string& path);

/// Provenance record written beside every output file. The timestamp is
/// informational only and excluded from the config hash.
class RunManifest {
 public:
  explicit RunManifest(std::string subcommand);

  void set_config(nlohmann::json config);
  void add_input(const std::string& path);
  void add_output(const std::string& path);
  void add_counter(const std::string& name, uint64_t value);

  nlohmann::json to_json() const;

  /// Writes `<output_path>.manifest.json`.
  void write_beside(const std::string& output_path) const;

 private:
  std::string subcommand_;
  nlohmann::json config_ = nlohmann::json::object();
  std::map<std::string, std::string> input_digests_;
  std::map<std::string, std::string> output_digests_;
  std::map<std::string, uint64_t> counters_;
};

}  // namespace ged

#endif  // GED_MANIFEST_HPP
