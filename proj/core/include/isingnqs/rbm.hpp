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

#ifndef ISINGNQS_RBM_HPP
#define ISINGNQS_RBM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>

#include "isingnqs/lattice.hpp"
#include "isingnqs/rng.hpp"

namespace isingnqs {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Restricted Boltzmann machine without visible biases. The amplitude is the
/// square root of the hidden-traced Boltzmann weight:
///
///   psi(s) = exp( 1/2 * sum_j log(2 cosh(theta_j)) ),  theta_j = b_j + sum_i W_ij s_i
///
/// so that psi(s)^2 is exactly the visible marginal of the joint RBM
/// distribution over (s, x).
struct RbmModel {
  int n_visible = 0;
  int alpha = 0;
  RowMatrix W;        // n_visible x n_hidden, W(i, j) couples visible i to hidden j
  Eigen::VectorXd b;  // n_hidden

  int n_hidden() const { return alpha * n_visible; }
  /// Hidden biases first, then W row-major.
  std::size_t n_params() const {
    return static_cast<std::size_t>(n_hidden()) * (1 + static_cast<std::size_t>(n_visible));
  }

  static RbmModel zeros(int n_visible, int alpha);
  /// Every parameter drawn independently from U[-scale, scale].
  static RbmModel random(int n_visible, int alpha, double scale, Rng& rng);

  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& params);

  /// Throws std::invalid_argument on inconsistent shapes or non-finite values.
  void validate() const;
};

/// log(2 cosh x) without overflow for large |x|.
inline double log_two_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax));
}

double log_psi(const RbmModel& model, std::span<const Spin> config);

/// theta_j = b_j + sum_i W_ij s_i, bound to one configuration, together with
/// the logistic weights e^{+-theta} / (2 cosh theta).
class ThetaCache {
 public:
  ThetaCache() = default;
  ThetaCache(const RbmModel& model, std::span<const Spin> config) { rebuild(model, config); }

  void rebuild(const RbmModel& model, std::span<const Spin> config);
  /// theta += delta, refreshing the logistic weights.
  void shift(const Eigen::Ref<const Eigen::VectorXd>& delta);

  const Eigen::VectorXd& theta() const { return theta_; }
  /// 1 / (1 + exp(-2 theta)).
  const Eigen::ArrayXd& up_weight() const { return up_; }
  /// 1 / (1 + exp(2 theta)).
  const Eigen::ArrayXd& down_weight() const { return down_; }

 private:
  void refresh();

  Eigen::VectorXd theta_;
  Eigen::ArrayXd up_;
  Eigen::ArrayXd down_;
};

/// log(psi(s')/psi(s)) where s' is `config` with `flips` negated.
double log_psi_ratio(const RbmModel& model, const ThetaCache& cache, std::span<const Spin> config,
                     std::span<const int> flips);

inline double psi_ratio(const RbmModel& model, const ThetaCache& cache, std::span<const Spin> config,
                        std::span<const int> flips) {
  return std::exp(log_psi_ratio(model, cache, config, flips));
}

/// Negates `flips` in `config` and updates `cache` incrementally.
void apply_flips(const RbmModel& model, ThetaCache& cache, std::span<Spin> config,
                 std::span<const int> flips);

/// O_k(s) = d log psi / d param_k in parameter order (b first, then W row-major):
/// O_{b_j} = tanh(theta_j) / 2 and O_{W_ij} = s_i tanh(theta_j) / 2.
Eigen::VectorXd log_derivatives(const RbmModel& model, std::span<const Spin> config);
void log_derivatives(const RbmModel& model, const ThetaCache& cache, std::span<const Spin> config,
                     Eigen::Ref<Eigen::VectorXd> out);

}  // namespace isingnqs

#endif  // ISINGNQS_RBM_HPP
