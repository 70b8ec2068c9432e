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

#include <map>
#include <sstream>

#include "isingnqs/chain_io.hpp"
#include "isingnqs/errors.hpp"
#include "isingnqs/oracle.hpp"
#include "isingnqs/samplers.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

ChainConfig short_config(std::int64_t sweeps, std::uint64_t seed) {
  ChainConfig cfg;
  cfg.n_sweeps = sweeps;
  cfg.thermalization_sweeps = 50;
  cfg.seed = seed;
  return cfg;
}

TEST(MhSampler, PreservesMagnetizationAndRecordsSweeps) {
  const SquareLattice lat = SquareLattice::build(4);
  const RbmModel model = testing::random_model(16, 2, 0.3, 1);
  ChainConfig cfg = short_config(300, 2);
  cfg.sample_interval = 3;
  const SpinChain chain = run_chain(ChainKind::Mh, model, cfg, lat);
  ASSERT_EQ(chain.size(), 100u);
  EXPECT_EQ(chain.sweep_index.front(), 3);
  EXPECT_EQ(chain.sweep_index.back(), 300);
  for (const SpinConfig& s : chain.samples) EXPECT_EQ(magnetization(s), 0);
  EXPECT_GT(chain.acceptance_or_flip_rate, 0.0);
  EXPECT_LE(chain.acceptance_or_flip_rate, 1.0);
}

TEST(MhSampler, SeedAndStreamDetermineTheChain) {
  const SquareLattice lat = SquareLattice::build(4);
  const RbmModel model = testing::random_model(16, 2, 0.3, 1);
  ChainConfig cfg = short_config(200, 5);
  const SpinChain a = run_chain(ChainKind::Mh, model, cfg, lat);
  const SpinChain b = run_chain(ChainKind::Mh, model, cfg, lat);
  EXPECT_EQ(a.samples, b.samples);
  cfg.stream = 1;
  const SpinChain c = run_chain(ChainKind::Mh, model, cfg, lat);
  EXPECT_NE(a.samples, c.samples);
}

TEST(MhSampler, PolarizedStateIsRejected) {
  const RbmModel model = RbmModel::zeros(4, 1);
  MhState state(model, SpinConfig(4, 1));
  Rng rng = make_stream(1, 0);
  EXPECT_THROW(mh_sweep(model, state, rng), std::logic_error);
}

TEST(MhSampler, ZeroModelAcceptsEverything) {
  const SquareLattice lat = SquareLattice::build(4);
  const RbmModel zero = RbmModel::zeros(16, 1);
  MhState state(zero, neel_state(lat));
  Rng rng = make_stream(1, 0);
  EXPECT_EQ(mh_sweep(zero, state, rng), 16);
}

TEST(MhSampler, NeighborProposalStaysInSector) {
  const SquareLattice lat = SquareLattice::build(4);
  const RbmModel model = testing::random_model(16, 1, 0.2, 3);
  ChainConfig cfg = short_config(200, 1);
  cfg.proposal = PairProposal::NearestNeighbor;
  const SpinChain chain = run_chain(ChainKind::Mh, model, cfg, lat);
  for (const SpinConfig& s : chain.samples) EXPECT_EQ(magnetization(s), 0);
  EXPECT_LT(chain.acceptance_or_flip_rate, 1.0);
}

TEST(MhSampler, SectorDistributionOnToyModel) {
  const RbmModel model = testing::random_model(6, 2, 0.8, 17);
  const auto exact = oracle::enumerate_visible_distribution(model).sector_probability;
  ChainConfig cfg = short_config(200000, 4);
  const SpinChain chain = run_chain(ChainKind::Mh, model, cfg);
  std::vector<double> empirical(exact.size(), 0.0);
  for (const SpinConfig& s : chain.samples) empirical[oracle::index_from_config(s)] += 1.0 / chain.size();
  EXPECT_LT(testing::total_variation(empirical, exact), 0.02);
}

TEST(SimSampler, ZeroModelFlipsHalfTheSpins) {
  const IsingModel ising = map_rbm_to_ising(RbmModel::zeros(16, 2));
  const SpinChain chain = run_sim_chain(ising, short_config(4000, 3));
  EXPECT_NEAR(chain.acceptance_or_flip_rate, 0.5, 0.01);
}

TEST(SimSampler, GibbsProbabilityMatchesBoltzmannRatio) {
  for (double field : {-2.0, -0.3, 0.0, 0.9, 4.0}) {
    const double p = gibbs_up_probability(field);
    EXPECT_NEAR(p / (1.0 - p), std::exp(2.0 * field), 1e-9 * std::exp(2.0 * field));
  }
  EXPECT_EQ(gibbs_up_probability(0.0), 0.5);
}

TEST(SimSampler, VisibleMarginalOnToyModel) {
  const RbmModel model = testing::random_model(4, 2, 1.0, 23);
  const auto exact = oracle::enumerate_visible_distribution(model).probability;
  const SpinChain chain = run_sim_chain(map_rbm_to_ising(model), short_config(200000, 8));
  std::vector<double> empirical(exact.size(), 0.0);
  for (const SpinConfig& s : chain.samples) empirical[oracle::index_from_config(s)] += 1.0 / chain.size();
  EXPECT_LT(testing::total_variation(empirical, exact), 0.01);
}

TEST(SimSampler, RecordsHiddenSnapshotsOnRequest) {
  const IsingModel ising = map_rbm_to_ising(testing::random_model(4, 2, 0.5, 1));
  ChainConfig cfg = short_config(20, 1);
  cfg.record_hidden = true;
  const SpinChain chain = run_sim_chain(ising, cfg);
  ASSERT_EQ(chain.hidden.size(), chain.size());
  EXPECT_EQ(chain.hidden.front().size(), 8u);
  cfg.record_hidden = false;
  EXPECT_TRUE(run_sim_chain(ising, cfg).hidden.empty());
}

TEST(Filter, KeepsSectorAndSweepBookkeeping) {
  const IsingModel ising = map_rbm_to_ising(RbmModel::zeros(4, 1));
  ChainConfig cfg = short_config(2000, 9);
  cfg.sample_interval = 2;
  const SpinChain raw = run_sim_chain(ising, cfg);
  const SpinChain kept = filter_magnetization_zero(raw);
  std::size_t expected = 0;
  for (int m : raw.magnetizations) expected += m == 0;
  ASSERT_EQ(kept.size(), expected);
  EXPECT_DOUBLE_EQ(kept.retained_fraction, static_cast<double>(expected) / raw.size());
  EXPECT_EQ(kept.total_sweeps, raw.total_sweeps);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    EXPECT_EQ(magnetization(kept.samples[k]), 0);
    EXPECT_EQ(kept.sweep_index[k] % 2, 0);
  }
}

TEST(Filter, EmptyResultIsAnExclusion) {
  SpinChain chain;
  chain.kind = ChainKind::Sim;
  chain.n_visible = 2;
  chain.samples = {SpinConfig{1, 1}};
  chain.sweep_index = {1};
  chain.magnetizations = {2};
  EXPECT_THROW(filter_magnetization_zero(chain), ExclusionError);
}

TEST(ChainIo, PackingIsMostSignificantBitFirst) {
  SpinConfig s(16, -1);
  s[0] = 1;
  EXPECT_EQ(pack_spins(s), "8000");
  s[15] = 1;
  EXPECT_EQ(pack_spins(s), "8001");
  const SpinConfig odd{1, -1, 1};
  EXPECT_EQ(pack_spins(odd), "a0");
  EXPECT_EQ(unpack_spins("a0", 3), odd);
}

TEST(ChainIo, CsvRoundTripWithHidden) {
  const IsingModel ising = map_rbm_to_ising(testing::random_model(4, 2, 0.5, 2));
  ChainConfig cfg = short_config(40, 3);
  cfg.record_hidden = true;
  const SpinChain chain = run_sim_chain(ising, cfg);
  std::stringstream io;
  write_chain_csv(io, chain, "note");
  std::string first;
  std::getline(io, first);
  EXPECT_EQ(first, "# note");
  std::string header;
  std::getline(io, header);
  EXPECT_EQ(header, "sweep_index,magnetization,packed_spins,packed_hidden");
  io.seekg(0);
  const SpinChain back = read_chain_csv(io, 4, ChainKind::Sim, 1, 8);
  EXPECT_EQ(back.samples, chain.samples);
  EXPECT_EQ(back.hidden, chain.hidden);
  EXPECT_EQ(back.sweep_index, chain.sweep_index);
  EXPECT_EQ(back.magnetizations, chain.magnetizations);
}

}  // namespace
}  // namespace isingnqs
