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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "isingnqs/heisenberg.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/oracle.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

TEST(Lattice, BondCountsMatchTorus) {
  EXPECT_EQ(SquareLattice::build(4).bonds().size(), 32u);
  EXPECT_EQ(SquareLattice::build(6).bonds().size(), 72u);
}

TEST(Lattice, RejectsSmallAndOddSides) {
  EXPECT_THROW(SquareLattice::build(2), std::invalid_argument);
  EXPECT_THROW(SquareLattice::build(5), std::invalid_argument);
  EXPECT_THROW(SquareLattice::build(-4), std::invalid_argument);
}

TEST(Lattice, SiteZeroNeighbors) {
  const SquareLattice lat = SquareLattice::build(4);
  const Neighbors& nb = lat.neighbors(0);
  std::set<int> got(nb.begin(), nb.end());
  EXPECT_EQ(got, (std::set<int>{1, 3, 4, 12}));
}

TEST(Lattice, EverySiteInFourBondsAndBondsAreBipartite) {
  for (int L : {4, 6, 8}) {
    const SquareLattice lat = SquareLattice::build(L);
    std::vector<int> degree(lat.size(), 0);
    std::set<std::pair<int, int>> seen;
    for (const Bond& b : lat.bonds()) {
      ++degree[b.a];
      ++degree[b.b];
      EXPECT_NE(lat.sublattice(b.a), lat.sublattice(b.b));
      EXPECT_TRUE(seen.insert({std::min(b.a, b.b), std::max(b.a, b.b)}).second);
    }
    EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 4; }));
  }
}

TEST(Lattice, NeelStateIsAntiparallelOnEveryBond) {
  for (int L : {4, 6}) {
    const SquareLattice lat = SquareLattice::build(L);
    const SpinConfig s = neel_state(lat);
    EXPECT_EQ(magnetization(s), 0);
    EXPECT_EQ(std::count(s.begin(), s.end(), 1), lat.size() / 2);
    for (const Bond& b : lat.bonds()) EXPECT_EQ(s[b.a], -s[b.b]);
  }
}

TEST(LocalEnergy, ZeroModelReferenceValues) {
  const SquareLattice lat = SquareLattice::build(4);
  const RbmModel zero = RbmModel::zeros(16, 2);
  EXPECT_DOUBLE_EQ(local_energy(lat, zero, neel_state(lat), 1.0), -24.0);
  EXPECT_DOUBLE_EQ(local_energy(lat, zero, SpinConfig(16, 1), 1.0), 8.0);
  EXPECT_DOUBLE_EQ(local_energy(lat, zero, neel_state(lat), 2.5), -60.0);
}

TEST(LocalEnergy, MatchesSparseHamiltonianRow) {
  // E_loc(s) = sum_s' H_ss' psi(s') / psi(s) with H built independently.
  const SquareLattice lat = SquareLattice::build(4);
  const oracle::SectorBasis basis(16);
  const auto h = oracle::heisenberg_sector_matrix(basis, lat.bonds(), 1.3);
  const RbmModel model = testing::random_model(16, 2, 0.3, 11);
  Rng rng = make_stream(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const SpinConfig s = testing::random_sector_config(16, rng);
    const auto row = static_cast<Eigen::Index>(basis.index_of(oracle::index_from_config(s)));
    const double log_s = testing::naive_log_psi(model, s);
    double expected = 0.0;
    for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
      const double v = h.coeff(row, col);
      if (v == 0.0) continue;
      const SpinConfig t = oracle::config_from_index(basis.state(col), 16);
      expected += v * std::exp(testing::naive_log_psi(model, t) - log_s);
    }
    EXPECT_NEAR(local_energy(lat, model, s, 1.3), expected, 1e-10);
  }
}

TEST(LocalEnergy, UniformStateHasDiagonalPlusExchangeCount) {
  const SquareLattice lat = SquareLattice::build(4);
  SpinConfig s = neel_state(lat);
  std::swap(s[0], s[1]);
  const RbmModel zero = RbmModel::zeros(16, 1);
  EXPECT_DOUBLE_EQ(uniform_local_energy(lat.bonds(), s, 1.0), local_energy(lat, zero, s, 1.0));
}

}  // namespace
}  // namespace isingnqs
