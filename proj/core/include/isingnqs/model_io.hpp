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

#ifndef ISINGNQS_MODEL_IO_HPP
#define ISINGNQS_MODEL_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "isingnqs/rbm.hpp"

namespace isingnqs {

inline constexpr int kModelSchemaVersion = 1;

struct TrainingMeta {
  std::string preset;
  int iterations = 0;
  double eta = 0.0;
  double final_energy = 0.0;
  double final_variance = 0.0;
  std::string manifest_hash;
};

/// On-disk model document: {schema_version, L, alpha, J, W, b, rng_seed,
/// training_meta}. W is the row-major flattening of the n x M weight matrix.
struct ModelFile {
  int L = 0;
  double J = 1.0;
  std::uint64_t rng_seed = 0;
  RbmModel model;
  TrainingMeta training_meta;
};

std::string model_to_json(const ModelFile& file);
/// Throws std::invalid_argument on schema or dimension mismatches.
ModelFile model_from_json(const std::string& text);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace isingnqs

#endif  // ISINGNQS_MODEL_IO_HPP
