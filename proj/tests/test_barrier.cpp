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

#include <sstream>

#include "isingnqs/barrier.hpp"
#include "isingnqs/oracle.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

SpinConfig random_joint(int size, Rng& rng) {
  SpinConfig m(size);
  for (Spin& s : m) s = uniform01(rng) < 0.5 ? 1 : -1;
  return m;
}

TEST(EnergyBarrier, MatchesDirectDifference) {
  Rng rng = make_stream(2, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const IsingModel ising = map_rbm_to_ising(testing::random_model(6, 1 + trial % 3, 1.0, 50 + trial));
    SpinConfig m = random_joint(ising.size(), rng);
    for (int i = 0; i < ising.size(); ++i) {
      SpinConfig f = m;
      f[i] = static_cast<Spin>(-f[i]);
      const double direct = ising_energy(ising, f) - ising_energy(ising, m);
      EXPECT_NEAR(energy_barrier(ising, m, i), direct, 1e-12);
      EXPECT_NEAR(energy_barrier(ising, m, i) + energy_barrier(ising, f, i), 0.0, 1e-12);
    }
  }
}

TEST(EnergyBarrier, ZeroModel) {
  const IsingModel ising = map_rbm_to_ising(RbmModel::zeros(4, 2));
  const SpinConfig m(12, 1);
  EXPECT_EQ(energy_barrier(ising, m, 3), 0.0);
}

TEST(EnergyBarrier, ConditionalFlipOddsAreBoltzmann) {
  const RbmModel model = testing::random_model(3, 2, 1.0, 8);
  const IsingModel ising = map_rbm_to_ising(model);
  const auto joint = oracle::enumerate_joint_boltzmann(ising).probability;
  for (std::uint64_t k = 0; k < joint.size(); k += 7) {
    const SpinConfig m = oracle::config_from_index(k, ising.size());
    for (int i = 0; i < ising.size(); ++i) {
      const std::uint64_t flipped = k ^ (std::uint64_t{1} << i);
      EXPECT_NEAR(joint[flipped] / joint[k], std::exp(-energy_barrier(ising, m, i)), 1e-10);
    }
  }
}

TEST(Barriers, WeightSummaries) {
  RbmModel model = RbmModel::zeros(2, 2);
  EXPECT_EQ(approx_barrier(model), 0.0);
  EXPECT_EQ(mean_connection_strength(model), 0.0);
  model.W.setOnes();
  EXPECT_DOUBLE_EQ(approx_barrier(model), 4.0);
  // sum |W| = n M = alpha n^2, so the normalized strength is exactly 1.
  EXPECT_DOUBLE_EQ(mean_connection_strength(model), 1.0);
  RbmModel bigger = RbmModel::zeros(16, 3);
  bigger.W.setConstant(-0.5);
  EXPECT_DOUBLE_EQ(mean_connection_strength(bigger), 0.5);
  EXPECT_DOUBLE_EQ(approx_barrier(bigger), 24.0);
}

TEST(Barriers, MeanVisibleBarrierSingleSample) {
  const RbmModel model = testing::random_model(4, 2, 0.8, 3);
  const IsingModel ising = map_rbm_to_ising(model);
  SpinChain chain;
  chain.kind = ChainKind::Sim;
  chain.n_visible = 4;
  chain.samples = {SpinConfig{1, -1, -1, 1}};
  chain.hidden = {SpinConfig{1, 1, -1, 1, -1, -1, 1, -1}};
  chain.sweep_index = {1};
  chain.magnetizations = {0};
  SpinConfig joint(chain.hidden[0]);
  joint.insert(joint.end(), chain.samples[0].begin(), chain.samples[0].end());
  double naive = 0.0;
  for (int i = 0; i < 4; ++i) naive += energy_barrier(ising, joint, 8 + i);
  EXPECT_NEAR(mean_visible_barrier(ising, chain), naive / 4, 1e-12);
  chain.hidden.clear();
  EXPECT_THROW(mean_visible_barrier(ising, chain), std::invalid_argument);
}

TEST(FlipRate, ZeroModelAndFrozenChain) {
  const IsingModel ising = map_rbm_to_ising(RbmModel::zeros(16, 2));
  ChainConfig cfg;
  cfg.n_sweeps = 4000;
  cfg.record_hidden = true;
  cfg.seed = 1;
  const SpinChain chain = run_sim_chain(ising, cfg);
  const FlipRates rates = flip_rate(chain);
  EXPECT_NEAR(rates.visible, 0.5, 0.01);
  EXPECT_NEAR(rates.hidden, 0.5, 0.01);

  SpinChain frozen = chain;
  for (std::size_t k = 1; k < frozen.size(); ++k) {
    frozen.samples[k] = frozen.samples[0];
    frozen.hidden[k] = frozen.hidden[0];
  }
  EXPECT_EQ(flip_rate(frozen).visible, 0.0);
  EXPECT_EQ(flip_rate(frozen).hidden, 0.0);
  frozen.interval = 2;
  EXPECT_THROW(flip_rate(frozen), std::invalid_argument);
}

TEST(BarrierCsv, Schema) {
  BarrierReport r;
  r.n_spins = 16;
  r.alpha = 2;
  r.model_id = "m";
  std::ostringstream out;
  write_barrier_csv_header(out);
  write_barrier_csv_row(out, r);
  EXPECT_EQ(out.str(),
            "n_spins,alpha,model_id,mean_barrier,approx_barrier,mean_connection,visible_flip_rate,"
            "hidden_flip_rate,log_tau_sim\n16,2,m,0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace isingnqs
