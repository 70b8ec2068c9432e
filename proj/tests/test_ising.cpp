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

#include "isingnqs/ising.hpp"
#include "isingnqs/oracle.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

TEST(IsingMapping, DenseCouplingsAreSymmetricBipartite) {
  const RbmModel model = testing::random_model(4, 2, 0.7, 1);
  const IsingModel ising = map_rbm_to_ising(model);
  const Eigen::MatrixXd J = ising.dense_couplings();
  ASSERT_EQ(J.rows(), 12);
  EXPECT_EQ(J, J.transpose());
  for (int a = 0; a < 12; ++a) {
    for (int c = 0; c < 12; ++c) {
      if (ising.is_hidden(a) == ising.is_hidden(c)) EXPECT_EQ(J(a, c), 0.0);
    }
  }
  EXPECT_EQ(J(3, 8 + 2), model.W(2, 3));
  const Eigen::VectorXd h = ising.dense_bias();
  EXPECT_EQ(h.head(8), model.b);
  EXPECT_TRUE(h.tail(4).isZero());
}

TEST(IsingMapping, EnergyMatchesQuadraticForm) {
  const RbmModel model = testing::random_model(6, 2, 0.9, 2);
  const IsingModel ising = map_rbm_to_ising(model);
  const Eigen::MatrixXd J = ising.dense_couplings();
  const Eigen::VectorXd h = ising.dense_bias();
  for (std::uint64_t k = 0; k < (1u << 18); k += 997) {
    const SpinConfig m = oracle::config_from_index(k, 18);
    Eigen::VectorXd v(18);
    for (int i = 0; i < 18; ++i) v(i) = m[i];
    const double expected = -h.dot(v) - 0.5 * v.dot(J * v);
    EXPECT_NEAR(ising_energy(ising, m), expected, 1e-12);
  }
}

TEST(IsingMapping, LocalFieldGivesFlipEnergy) {
  const RbmModel model = testing::random_model(4, 3, 0.9, 3);
  const IsingModel ising = map_rbm_to_ising(model);
  Rng rng = make_stream(1, 0);
  for (int trial = 0; trial < 50; ++trial) {
    SpinConfig m(ising.size());
    for (Spin& s : m) s = uniform01(rng) < 0.5 ? 1 : -1;
    const int i = static_cast<int>(uniform_index(rng, ising.size()));
    SpinConfig flipped = m;
    flipped[i] = static_cast<Spin>(-m[i]);
    EXPECT_NEAR(ising_energy(ising, flipped) - ising_energy(ising, m), 2.0 * m[i] * local_field(ising, m, i), 1e-12);
  }
}

TEST(IsingMapping, HiddenTraceReproducesPsiSquared) {
  for (int trial = 0; trial < 5; ++trial) {
    const RbmModel model = testing::random_model(4, 2, 1.0, 40 + trial);
    const auto joint = oracle::enumerate_joint_boltzmann(map_rbm_to_ising(model)).visible_marginal();
    const auto visible = oracle::enumerate_visible_distribution(model).probability;
    for (std::size_t k = 0; k < visible.size(); ++k) {
      EXPECT_NEAR(joint[k] / visible[k], 1.0, 1e-12);
    }
  }
}

TEST(IsingMapping, TextExportFormat) {
  RbmModel model = RbmModel::zeros(2, 1);
  model.W << 0.5, -0.25, 1.0, 2.0;
  model.b << 0.1, 0.0;
  std::ostringstream out;
  map_rbm_to_ising(model).write_text(out);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "4 2 2");
  EXPECT_NE(text.find("0 2 0.5\n"), std::string::npos);
  EXPECT_NE(text.find("1 2 -0.25\n"), std::string::npos);
  EXPECT_NE(text.find("0 3 1\n"), std::string::npos);
  EXPECT_NE(text.find("1 3 2\n"), std::string::npos);
  EXPECT_NE(text.find("0 0.1\n"), std::string::npos);
}

}  // namespace
}  // namespace isingnqs
