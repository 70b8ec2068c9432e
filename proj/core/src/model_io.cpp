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

#include "isingnqs/model_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace isingnqs {

using nlohmann::json;

std::string model_to_json(const ModelFile& file) {
  const RbmModel& m = file.model;
  json doc;
  doc["schema_version"] = kModelSchemaVersion;
  doc["L"] = file.L;
  doc["alpha"] = m.alpha;
  doc["J"] = file.J;
  doc["W"] = std::vector<double>(m.W.data(), m.W.data() + m.W.size());
  doc["b"] = std::vector<double>(m.b.data(), m.b.data() + m.b.size());
  doc["rng_seed"] = file.rng_seed;
  doc["training_meta"] = {
      {"preset", file.training_meta.preset},
      {"iterations", file.training_meta.iterations},
      {"eta", file.training_meta.eta},
      {"final_energy", file.training_meta.final_energy},
      {"final_variance", file.training_meta.final_variance},
      {"manifest_hash", file.training_meta.manifest_hash},
  };
  return doc.dump(2) + "\n";
}

ModelFile model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kModelSchemaVersion) {
      throw std::invalid_argument("unsupported model schema_version");
    }
    ModelFile file;
    file.L = doc.at("L").get<int>();
    file.J = doc.at("J").get<double>();
    file.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
    const int alpha = doc.at("alpha").get<int>();
    if (file.L <= 0 || alpha <= 0) throw std::invalid_argument("model L and alpha must be positive");
    const int n = file.L * file.L;
    file.model = RbmModel::zeros(n, alpha);
    const auto W = doc.at("W").get<std::vector<double>>();
    const auto b = doc.at("b").get<std::vector<double>>();
    if (W.size() != static_cast<std::size_t>(file.model.W.size())) {
      throw std::invalid_argument("model W has " + std::to_string(W.size()) + " entries, expected " +
                                  std::to_string(file.model.W.size()));
    }
    if (b.size() != static_cast<std::size_t>(file.model.b.size())) {
      throw std::invalid_argument("model b has " + std::to_string(b.size()) + " entries, expected " +
                                  std::to_string(file.model.b.size()));
    }
    std::copy(W.begin(), W.end(), file.model.W.data());
    std::copy(b.begin(), b.end(), file.model.b.data());
    file.model.validate();
    if (doc.contains("training_meta")) {
      const json& meta = doc["training_meta"];
      file.training_meta.preset = meta.value("preset", "");
      file.training_meta.iterations = meta.value("iterations", 0);
      file.training_meta.eta = meta.value("eta", 0.0);
      file.training_meta.final_energy = meta.value("final_energy", 0.0);
      file.training_meta.final_variance = meta.value("final_variance", 0.0);
      file.training_meta.manifest_hash = meta.value("manifest_hash", "");
    }
    return file;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << model_to_json(file);
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace isingnqs
