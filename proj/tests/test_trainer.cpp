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

#include "isingnqs/oracle.hpp"
#include "isingnqs/trainer.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

TEST(Presets, TableValues) {
  const TrainConfig low = TrainConfig::from_preset(Preset::Low);
  EXPECT_EQ(low.n_samples, 2000);
  EXPECT_DOUBLE_EQ(low.eps, 1e-4);
  EXPECT_DOUBLE_EQ(low.decay, 0.9);
  EXPECT_DOUBLE_EQ(low.eps0, 100.0);
  EXPECT_DOUBLE_EQ(low.eta, 0.005);
  const TrainConfig high = TrainConfig::from_preset(Preset::High);
  EXPECT_EQ(high.n_samples, 10000);
  EXPECT_DOUBLE_EQ(high.eps, 1e-3);
  EXPECT_DOUBLE_EQ(high.decay, 0.85);
  EXPECT_DOUBLE_EQ(high.eps0, 10.0);
}

TEST(Presets, SizeRule) {
  EXPECT_EQ(preset_for(16, 2), Preset::Low);
  EXPECT_EQ(preset_for(100, 8), Preset::Low);
  EXPECT_EQ(preset_for(144, 4), Preset::Low);
  EXPECT_EQ(preset_for(196, 8), Preset::High);
  EXPECT_EQ(preset_for(256, 1), Preset::High);
  EXPECT_EQ(parse_preset("high"), Preset::High);
  EXPECT_THROW(parse_preset("medium"), std::invalid_argument);
}

TEST(Regularization, DecaysToFloor) {
  const TrainConfig cfg = TrainConfig::from_preset(Preset::Low);
  EXPECT_DOUBLE_EQ(regularization_shift(cfg, 0), 100.0);
  EXPECT_DOUBLE_EQ(regularization_shift(cfg, 1), 90.0);
  EXPECT_DOUBLE_EQ(regularization_shift(cfg, 1000), 1e-4);
}

TEST(SrMatrices, CovarianceDefinitions) {
  Eigen::MatrixXd o(3, 2);
  o << 1, 2, 3, 0, 5, 4;
  const Eigen::MatrixXd s = sr_matrix(o);
  // Means (3, 2); centered rows (-2, 0), (0, -2), (2, 2).
  EXPECT_NEAR(s(0, 0), 8.0 / 3, 1e-15);
  EXPECT_NEAR(s(1, 1), 8.0 / 3, 1e-15);
  EXPECT_NEAR(s(0, 1), 4.0 / 3, 1e-15);
  EXPECT_NEAR(s(1, 0), 4.0 / 3, 1e-15);
  const std::vector<double> e{1.0, 4.0, 7.0};
  const Eigen::VectorXd f = force_vector(o, e);
  EXPECT_NEAR(f(0), (-2 * -3 + 0 * 0 + 2 * 3) / 3.0, 1e-15);
  EXPECT_NEAR(f(1), (0 * -3 + -2 * 0 + 2 * 3) / 3.0, 1e-15);
}

TEST(SrStep, TwoParameterClosedForm) {
  RbmModel model = RbmModel::zeros(1, 1);
  model.b(0) = 0.3;
  model.W(0, 0) = -0.7;
  Eigen::MatrixXd o(4, 2);
  o << 0.1, 0.5, -0.2, 0.4, 0.3, -0.1, 0.0, 0.2;
  const std::vector<double> e{-1.0, 0.5, 2.0, -0.25};

  // Closed-form reference: 2x2 covariances and an explicit inverse.
  double m0 = 0, m1 = 0, me = 0;
  for (int r = 0; r < 4; ++r) {
    m0 += o(r, 0) / 4;
    m1 += o(r, 1) / 4;
    me += e[r] / 4;
  }
  double s00 = 0, s01 = 0, s11 = 0, f0 = 0, f1 = 0;
  for (int r = 0; r < 4; ++r) {
    const double a = o(r, 0) - m0;
    const double c = o(r, 1) - m1;
    s00 += a * a / 4;
    s01 += a * c / 4;
    s11 += c * c / 4;
    f0 += a * (e[r] - me) / 4;
    f1 += c * (e[r] - me) / 4;
  }
  TrainConfig cfg = TrainConfig::from_preset(Preset::Low);
  cfg.eta = 0.05;
  cfg.eps0 = 0.2;
  cfg.decay = 0.5;
  cfg.eps = 1e-3;
  const int iteration = 2;
  const double shift = 0.05;  // max(1e-3, 0.2 * 0.5^2)
  s00 += shift;
  s11 += shift;
  const double det = s00 * s11 - s01 * s01;
  const double d0 = (s11 * f0 - s01 * f1) / det;
  const double d1 = (s00 * f1 - s01 * f0) / det;

  const SrStepInfo info = sr_step(model, o, e, iteration, cfg);
  EXPECT_DOUBLE_EQ(info.shift, shift);
  EXPECT_NEAR(info.grad_norm, std::hypot(f0, f1), 1e-15);
  EXPECT_NEAR(model.b(0), 0.3 - 0.05 * d0, 1e-12);
  EXPECT_NEAR(model.W(0, 0), -0.7 - 0.05 * d1, 1e-12);
}

TEST(SrStep, ZeroLearningRateLeavesModel) {
  RbmModel model = testing::random_model(4, 1, 0.1, 1);
  const RbmModel before = model;
  Eigen::MatrixXd o = Eigen::MatrixXd::Random(10, static_cast<Eigen::Index>(model.n_params()));
  const std::vector<double> e(10, 1.0);
  TrainConfig cfg;
  cfg.eta = 0.0;
  sr_step(model, o, e, 0, cfg);
  EXPECT_EQ(model.W, before.W);
}

TEST(Train, DeterministicAndLowersEnergy) {
  const SquareLattice lat = SquareLattice::build(4);
  TrainConfig cfg = TrainConfig::from_preset(Preset::Low);
  cfg.iterations = 150;
  cfg.n_samples = 500;
  cfg.seed = 4;
  const TrainResult a = train(lat, 1, 1.0, cfg);
  const TrainResult b = train(lat, 1, 1.0, cfg);
  EXPECT_EQ(a.model.W, b.model.W);
  EXPECT_EQ(a.history.energy, b.history.energy);
  ASSERT_EQ(a.history.size(), 150u);
  const RbmModel start = [&] {
    Rng rng = make_stream(cfg.seed, 0);
    return RbmModel::random(16, 1, cfg.init_scale, rng);
  }();
  EXPECT_LT(oracle::exact_variational_energy(a.model, lat, 1.0),
            oracle::exact_variational_energy(start, lat, 1.0) - 0.3);
}

TEST(History, CsvHeader) {
  TrainHistory h;
  h.energy = {-1.5};
  h.variance = {0.25};
  h.eps = {100.0};
  h.grad_norm = {0.125};
  std::ostringstream out;
  write_history_csv(out, h);
  EXPECT_EQ(out.str(), "iter,energy,variance,eps_p,grad_norm\n0,-1.5,0.25,100,0.125\n");
}

}  // namespace
}  // namespace isingnqs
