// Copyright 2026 The ising-nqs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGNQS_TOOLS_MANIFEST_HPP
#define ISINGNQS_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace isingnqs::cli {

/// Every setting of every subcommand. A JSON manifest fills these first;
/// command-line flags then overwrite individual fields.
struct Manifest {
  int L = 4;
  int alpha = 2;
  double J = 1.0;
  std::uint64_t seed = 1;

  int replicas = 5;
  std::string preset = "auto";
  int iterations = 600;
  double eta = 0.005;
  int train_chains = 1;

  std::string kind = "both";
  int chains = 10;
  std::int64_t samples = 32768;
  std::int64_t thermalization = 200;
  std::string proposal = "global";
  bool record_hidden = false;
  std::int64_t mh_interval = 0;   // 0 selects the default rule
  std::int64_t sim_interval = 0;  // 0 runs the pilot search

  double fit_window_mult = 5.0;
  int baseline_chains = 32;
  std::int64_t baseline_sweeps = 10000;
  int grid_per_decade = 20;

  std::vector<std::string> models;
  std::string chains_dir;
  std::vector<std::string> reports;
  std::vector<std::string> points;    // "n_spins:ratio"
  std::vector<std::string> profiles;  // "name:seconds"
  bool measure_cpu = false;
  int ring = 0;

  std::string out = ".";
  unsigned threads = 1;
};

nlohmann::json to_json(const Manifest& m);
/// Unknown keys are rejected with std::invalid_argument.
Manifest manifest_from_json(const nlohmann::json& doc, Manifest base);
Manifest load_manifest(const std::filesystem::path& path, Manifest base);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string file_hash(const std::filesystem::path& path);

/// Hash of the settings that determine a command's outputs. Output
/// directory and thread count are left out; input files enter by content.
std::string manifest_hash(const std::string& command, const Manifest& m);

}  // namespace isingnqs::cli

#endif  // ISINGNQS_TOOLS_MANIFEST_HPP
