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

#ifndef ISINGNQS_LATTICE_HPP
#define ISINGNQS_LATTICE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace isingnqs {

/// z-projection of a spin-1/2 site, stored as -1 or +1.
using Spin = std::int8_t;
using SpinConfig = std::vector<Spin>;

struct Bond {
  int a;
  int b;
  friend bool operator==(const Bond&, const Bond&) = default;
};

using Neighbors = std::array<int, 4>;

/// L x L square lattice with periodic boundaries. Sites are numbered
/// row-major (site = row * L + col); this ordering is part of every file
/// format that stores configurations.
class SquareLattice {
 public:
  /// Throws std::invalid_argument unless L >= 4 and L is even.
  static SquareLattice build(int L);

  int side() const { return side_; }
  int size() const { return side_ * side_; }
  std::span<const Bond> bonds() const { return bonds_; }
  std::span<const Neighbors> neighbors() const { return neighbors_; }
  const Neighbors& neighbors(int site) const { return neighbors_[site]; }

  /// 0 or 1; every bond joins opposite sublattices.
  int sublattice(int site) const { return (site / side_ + site % side_) % 2; }

 private:
  explicit SquareLattice(int L);

  int side_;
  std::vector<Bond> bonds_;
  std::vector<Neighbors> neighbors_;
};

/// +1 on sublattice 0, -1 on sublattice 1.
SpinConfig neel_state(const SquareLattice& lattice);

int magnetization(std::span<const Spin> config);

}  // namespace isingnqs

#endif  // ISINGNQS_LATTICE_HPP
