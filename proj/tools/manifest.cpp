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

#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isingnqs::cli {

nlohmann::json to_json(const Manifest& m) {
  return {
      {"L", m.L},
      {"alpha", m.alpha},
      {"J", m.J},
      {"seed", m.seed},
      {"replicas", m.replicas},
      {"preset", m.preset},
      {"iterations", m.iterations},
      {"eta", m.eta},
      {"train_chains", m.train_chains},
      {"kind", m.kind},
      {"chains", m.chains},
      {"samples", m.samples},
      {"thermalization", m.thermalization},
      {"proposal", m.proposal},
      {"record_hidden", m.record_hidden},
      {"mh_interval", m.mh_interval},
      {"sim_interval", m.sim_interval},
      {"fit_window_mult", m.fit_window_mult},
      {"baseline_chains", m.baseline_chains},
      {"baseline_sweeps", m.baseline_sweeps},
      {"grid_per_decade", m.grid_per_decade},
      {"models", m.models},
      {"chains_dir", m.chains_dir},
      {"reports", m.reports},
      {"points", m.points},
      {"profiles", m.profiles},
      {"measure_cpu", m.measure_cpu},
      {"ring", m.ring},
      {"out", m.out},
      {"threads", m.threads},
  };
}

namespace {

template <typename T>
void take(const nlohmann::json& doc, const char* key, T& field) {
  if (doc.contains(key)) field = doc.at(key).get<T>();
}

}  // namespace

Manifest manifest_from_json(const nlohmann::json& doc, Manifest m) {
  if (!doc.is_object()) throw std::invalid_argument("manifest must be a JSON object");
  const nlohmann::json known = to_json(m);
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) throw std::invalid_argument("unknown manifest key '" + item.key() + "'");
  }
  try {
    take(doc, "L", m.L);
    take(doc, "alpha", m.alpha);
    take(doc, "J", m.J);
    take(doc, "seed", m.seed);
    take(doc, "replicas", m.replicas);
    take(doc, "preset", m.preset);
    take(doc, "iterations", m.iterations);
    take(doc, "eta", m.eta);
    take(doc, "train_chains", m.train_chains);
    take(doc, "kind", m.kind);
    take(doc, "chains", m.chains);
    take(doc, "samples", m.samples);
    take(doc, "thermalization", m.thermalization);
    take(doc, "proposal", m.proposal);
    take(doc, "record_hidden", m.record_hidden);
    take(doc, "mh_interval", m.mh_interval);
    take(doc, "sim_interval", m.sim_interval);
    take(doc, "fit_window_mult", m.fit_window_mult);
    take(doc, "baseline_chains", m.baseline_chains);
    take(doc, "baseline_sweeps", m.baseline_sweeps);
    take(doc, "grid_per_decade", m.grid_per_decade);
    take(doc, "models", m.models);
    take(doc, "chains_dir", m.chains_dir);
    take(doc, "reports", m.reports);
    take(doc, "points", m.points);
    take(doc, "profiles", m.profiles);
    take(doc, "measure_cpu", m.measure_cpu);
    take(doc, "ring", m.ring);
    take(doc, "out", m.out);
    take(doc, "threads", m.threads);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad manifest value: ") + e.what());
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path, Manifest base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("manifest " + path.string() + " is not valid JSON: " + e.what());
  }
  return manifest_from_json(doc, std::move(base));
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_hash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

std::string manifest_hash(const std::string& command, const Manifest& m) {
  nlohmann::json doc = to_json(m);
  doc.erase("out");
  doc.erase("threads");
  nlohmann::json models = nlohmann::json::array();
  for (const std::string& p : m.models) models.push_back(file_hash(p));
  doc["models"] = models;
  nlohmann::json reports = nlohmann::json::array();
  for (const std::string& p : m.reports) reports.push_back(file_hash(p));
  doc["reports"] = reports;
  if (!m.chains_dir.empty()) {
    const std::filesystem::path index = std::filesystem::path(m.chains_dir) / "chains.json";
    doc["chains_dir"] = std::filesystem::exists(index) ? file_hash(index) : std::string("missing");
  }
  doc["command"] = command;
  return fnv1a_hex(doc.dump());
}

}  // namespace isingnqs::cli
