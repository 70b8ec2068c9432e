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

#include "isingnqs/rbm.hpp"

#include <stdexcept>
#include <string>

namespace isingnqs {

RbmModel RbmModel::zeros(int n_visible, int alpha) {
  if (n_visible <= 0 || alpha <= 0) {
    throw std::invalid_argument("RBM needs positive visible count and alpha");
  }
  RbmModel m;
  m.n_visible = n_visible;
  m.alpha = alpha;
  m.W = RowMatrix::Zero(n_visible, m.n_hidden());
  m.b = Eigen::VectorXd::Zero(m.n_hidden());
  return m;
}

RbmModel RbmModel::random(int n_visible, int alpha, double scale, Rng& rng) {
  RbmModel m = zeros(n_visible, alpha);
  auto draw = [&] { return scale * (2.0 * uniform01(rng) - 1.0); };
  for (Eigen::Index j = 0; j < m.b.size(); ++j) m.b(j) = draw();
  for (Eigen::Index i = 0; i < m.W.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.W.cols(); ++j) m.W(i, j) = draw();
  }
  return m;
}

Eigen::VectorXd RbmModel::parameters() const {
  Eigen::VectorXd p(static_cast<Eigen::Index>(n_params()));
  p.head(b.size()) = b;
  p.tail(W.size()) = Eigen::Map<const Eigen::VectorXd>(W.data(), W.size());
  return p;
}

void RbmModel::set_parameters(const Eigen::VectorXd& params) {
  if (params.size() != static_cast<Eigen::Index>(n_params())) {
    throw std::invalid_argument("parameter vector has length " + std::to_string(params.size()) +
                                ", expected " + std::to_string(n_params()));
  }
  b = params.head(b.size());
  Eigen::Map<Eigen::VectorXd>(W.data(), W.size()) = params.tail(W.size());
}

void RbmModel::validate() const {
  if (n_visible <= 0 || alpha <= 0) throw std::invalid_argument("RBM dimensions must be positive");
  if (W.rows() != n_visible || W.cols() != n_hidden() || b.size() != n_hidden()) {
    throw std::invalid_argument("RBM parameter shapes do not match n_visible and alpha");
  }
  if (!W.allFinite() || !b.allFinite()) throw std::invalid_argument("RBM parameters must be finite");
}

namespace {

void check_length(const RbmModel& model, std::span<const Spin> config) {
  if (static_cast<int>(config.size()) != model.n_visible) {
    throw std::invalid_argument("configuration length " + std::to_string(config.size()) +
                                " does not match visible count " + std::to_string(model.n_visible));
  }
}

}  // namespace

double log_psi(const RbmModel& model, std::span<const Spin> config) {
  const ThetaCache cache(model, config);
  double sum = 0.0;
  for (Eigen::Index j = 0; j < cache.theta().size(); ++j) sum += log_two_cosh(cache.theta()(j));
  return 0.5 * sum;
}

void ThetaCache::rebuild(const RbmModel& model, std::span<const Spin> config) {
  check_length(model, config);
  theta_ = model.b;
  for (int i = 0; i < model.n_visible; ++i) {
    if (config[i] > 0) {
      theta_ += model.W.row(i).transpose();
    } else {
      theta_ -= model.W.row(i).transpose();
    }
  }
  refresh();
}

void ThetaCache::shift(const Eigen::Ref<const Eigen::VectorXd>& delta) {
  theta_ += delta;
  refresh();
}

void ThetaCache::refresh() {
  up_ = 1.0 / (1.0 + (-2.0 * theta_.array()).exp());
  down_ = 1.0 / (1.0 + (2.0 * theta_.array()).exp());
}

double log_psi_ratio(const RbmModel& model, const ThetaCache& cache, std::span<const Spin> config,
                     std::span<const int> flips) {
  if (flips.empty()) return 0.0;
  const Eigen::Index m = cache.theta().size();
  // cosh(theta - d) / cosh(theta) = up e^{-d} + down e^{d}.
  thread_local Eigen::ArrayXd d;
  d.setZero(m);
  for (int f : flips) d += (2.0 * config[f]) * model.W.row(f).transpose().array();
  d = d.exp();
  d = cache.up_weight() / d + cache.down_weight() * d;
  return 0.5 * d.log().sum();
}

void apply_flips(const RbmModel& model, ThetaCache& cache, std::span<Spin> config,
                 std::span<const int> flips) {
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(cache.theta().size());
  for (int f : flips) {
    delta -= (2.0 * config[f]) * model.W.row(f).transpose();
    config[f] = static_cast<Spin>(-config[f]);
  }
  cache.shift(delta);
}

Eigen::VectorXd log_derivatives(const RbmModel& model, std::span<const Spin> config) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(model.n_params()));
  log_derivatives(model, ThetaCache(model, config), config, out);
  return out;
}

void log_derivatives(const RbmModel& model, const ThetaCache& cache, std::span<const Spin> config,
                     Eigen::Ref<Eigen::VectorXd> out) {
  const Eigen::Index m = model.n_hidden();
  const Eigen::VectorXd half_tanh = 0.5 * (cache.up_weight() - cache.down_weight()).matrix();
  out.head(m) = half_tanh;
  for (int i = 0; i < model.n_visible; ++i) {
    out.segment(m + i * m, m) = config[i] > 0 ? half_tanh : Eigen::VectorXd(-half_tanh);
  }
}

}  // namespace isingnqs
