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

#include <cmath>

#include "isingnqs/model_io.hpp"
#include "isingnqs/rbm.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

TEST(Rbm, LogTwoCoshIsStableForLargeArguments) {
  EXPECT_NEAR(log_two_cosh(0.0), std::log(2.0), 1e-15);
  EXPECT_NEAR(log_two_cosh(0.7), std::log(2.0 * std::cosh(0.7)), 1e-14);
  EXPECT_DOUBLE_EQ(log_two_cosh(1000.0), 1000.0);
  EXPECT_DOUBLE_EQ(log_two_cosh(-1000.0), 1000.0);
}

TEST(Rbm, ZeroModelIsUniform) {
  const RbmModel zero = RbmModel::zeros(16, 2);
  EXPECT_EQ(zero.n_hidden(), 32);
  EXPECT_EQ(zero.n_params(), 32u * 17u);
  EXPECT_NEAR(log_psi(zero, SpinConfig(16, 1)), 16.0 * std::log(2.0), 1e-12);
}

TEST(Rbm, LogPsiMatchesDirectFormula) {
  Rng rng = make_stream(3, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const RbmModel model = testing::random_model(16, 1 + trial % 3, 0.5, 100 + trial);
    const SpinConfig s = testing::random_sector_config(16, rng);
    EXPECT_NEAR(log_psi(model, s), testing::naive_log_psi(model, s), 1e-11);
  }
}

TEST(Rbm, RatiosMatchAmplitudeDifferences) {
  const RbmModel model = testing::random_model(16, 2, 0.8, 7);
  Rng rng = make_stream(9, 0);
  for (int trial = 0; trial < 50; ++trial) {
    SpinConfig s = testing::random_sector_config(16, rng);
    const ThetaCache cache(model, s);
    std::vector<int> flips;
    const int k = 1 + trial % 4;
    while (static_cast<int>(flips.size()) < k) {
      const int site = static_cast<int>(uniform_index(rng, 16));
      if (std::find(flips.begin(), flips.end(), site) == flips.end()) flips.push_back(site);
    }
    SpinConfig t = s;
    for (int f : flips) t[f] = static_cast<Spin>(-t[f]);
    const double expected = testing::naive_log_psi(model, t) - testing::naive_log_psi(model, s);
    EXPECT_NEAR(log_psi_ratio(model, cache, s, flips), expected, 1e-11);
    EXPECT_NEAR(psi_ratio(model, cache, s, flips), std::exp(expected), 1e-10 * std::exp(expected));
  }
}

TEST(Rbm, RatioSurvivesSaturatedHiddenUnits) {
  RbmModel model = RbmModel::zeros(4, 1);
  model.W.setConstant(30.0);
  const SpinConfig s{1, 1, 1, -1};
  const ThetaCache cache(model, s);
  const std::vector<int> flips{0, 3};
  const SpinConfig t{-1, 1, 1, 1};
  EXPECT_NEAR(log_psi_ratio(model, cache, s, flips), testing::naive_log_psi(model, t) - testing::naive_log_psi(model, s),
              1e-9);
}

TEST(Rbm, ApplyFlipsKeepsCacheConsistent) {
  const RbmModel model = testing::random_model(16, 3, 0.4, 21);
  Rng rng = make_stream(4, 0);
  SpinConfig s = testing::random_sector_config(16, rng);
  ThetaCache cache(model, s);
  for (int step = 0; step < 200; ++step) {
    const int a = static_cast<int>(uniform_index(rng, 16));
    const int b = static_cast<int>(uniform_index(rng, 16));
    if (a == b) continue;
    const std::vector<int> flips{a, b};
    apply_flips(model, cache, s, flips);
  }
  const ThetaCache fresh(model, s);
  EXPECT_LT((cache.theta() - fresh.theta()).cwiseAbs().maxCoeff(), 1e-11);
  EXPECT_LT((cache.up_weight() - fresh.up_weight()).abs().maxCoeff(), 1e-12);
}

TEST(Rbm, ParameterRoundTripOrder) {
  RbmModel model = RbmModel::zeros(4, 2);
  Eigen::VectorXd p(model.n_params());
  for (Eigen::Index k = 0; k < p.size(); ++k) p(k) = static_cast<double>(k);
  model.set_parameters(p);
  EXPECT_EQ(model.b(0), 0.0);
  EXPECT_EQ(model.b(7), 7.0);
  EXPECT_EQ(model.W(0, 0), 8.0);
  EXPECT_EQ(model.W(0, 1), 9.0);
  EXPECT_EQ(model.W(1, 0), 16.0);
  EXPECT_EQ(model.parameters(), p);
}

TEST(Rbm, LogDerivativesMatchCentralDifferences) {
  Rng rng = make_stream(8, 0);
  for (int trial = 0; trial < 5; ++trial) {
    RbmModel model = testing::random_model(8, 2, 0.5, 300 + trial);
    const SpinConfig s = testing::random_sector_config(8, rng);
    const Eigen::VectorXd analytic = log_derivatives(model, s);
    const Eigen::VectorXd p0 = model.parameters();
    const double h = 1e-5;
    for (Eigen::Index k = 0; k < p0.size(); ++k) {
      Eigen::VectorXd p = p0;
      p(k) += h;
      model.set_parameters(p);
      const double up = testing::naive_log_psi(model, s);
      p(k) -= 2 * h;
      model.set_parameters(p);
      const double down = testing::naive_log_psi(model, s);
      EXPECT_NEAR(analytic(k), (up - down) / (2 * h), 1e-8);
    }
    model.set_parameters(p0);
  }
}

TEST(Rbm, ValidateRejectsBadShapes) {
  RbmModel model = RbmModel::zeros(4, 2);
  EXPECT_NO_THROW(model.validate());
  model.b.resize(3);
  EXPECT_THROW(model.validate(), std::invalid_argument);
  model = RbmModel::zeros(4, 2);
  model.W(0, 0) = std::nan("");
  EXPECT_THROW(model.validate(), std::invalid_argument);
}

TEST(ModelIo, JsonRoundTripIsExact) {
  ModelFile file;
  file.L = 4;
  file.J = 1.0;
  file.rng_seed = 12345678901234ULL;
  file.model = testing::random_model(16, 2, 0.1, 5);
  file.training_meta.preset = "low";
  file.training_meta.iterations = 600;
  file.training_meta.eta = 0.005;
  file.training_meta.manifest_hash = "abc";
  const std::string text = model_to_json(file);
  const ModelFile back = model_from_json(text);
  EXPECT_EQ(back.model.W, file.model.W);
  EXPECT_EQ(back.model.b, file.model.b);
  EXPECT_EQ(back.rng_seed, file.rng_seed);
  EXPECT_EQ(back.training_meta.manifest_hash, "abc");
  EXPECT_EQ(model_to_json(back), text);
}

TEST(ModelIo, RejectsDimensionMismatch) {
  ModelFile file;
  file.L = 4;
  file.model = RbmModel::zeros(16, 1);
  std::string text = model_to_json(file);
  const auto pos = text.find("\"alpha\": 1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 10, "\"alpha\": 2");
  EXPECT_THROW(model_from_json(text), std::invalid_argument);
}

}  // namespace
}  // namespace isingnqs
