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

#include "isingnqs/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace isingnqs {

SquareLattice SquareLattice::build(int L) {
  if (L < 4) {
    throw std::invalid_argument("lattice side must be at least 4, got " + std::to_string(L));
  }
  if (L % 2 != 0) {
    throw std::invalid_argument("lattice side must be even (bipartite, magnetization-0 sector), got " +
                                std::to_string(L));
  }
  return SquareLattice(L);
}

SquareLattice::SquareLattice(int L) : side_(L) {
  const int n = L * L;
  bonds_.reserve(2 * static_cast<std::size_t>(n));
  neighbors_.resize(n);
  for (int row = 0; row < L; ++row) {
    for (int col = 0; col < L; ++col) {
      const int site = row * L + col;
      const int right = row * L + (col + 1) % L;
      const int down = ((row + 1) % L) * L + col;
      bonds_.push_back({site, right});
      bonds_.push_back({site, down});
      neighbors_[site] = {right, row * L + (col + L - 1) % L, down, ((row + L - 1) % L) * L + col};
    }
  }
}

SpinConfig neel_state(const SquareLattice& lattice) {
  SpinConfig s(lattice.size());
  for (int i = 0; i < lattice.size(); ++i) s[i] = lattice.sublattice(i) == 0 ? 1 : -1;
  return s;
}

int magnetization(std::span<const Spin> config) {
  return std::accumulate(config.begin(), config.end(), 0);
}

}  // namespace isingnqs
