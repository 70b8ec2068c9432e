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

#ifndef ISINGNQS_ISING_HPP
#define ISINGNQS_ISING_HPP

#include <Eigen/Dense>
#include <ostream>
#include <span>

#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"

namespace isingnqs {

/// Classical Ising model H(m) = -sum_i h_i m_i - sum_{i<j} J_ij m_i m_j with
/// Boltzmann weight exp(-H) at unit temperature, over the joint spin vector
/// m = [x_1 .. x_M, s_1 .. s_n] (hidden block first).
///
/// Built from an RBM, J is bipartite (hidden-visible only) and h vanishes on
/// the visible block, so only W and the hidden biases are stored. The dense
/// (M+n)^2 coupling matrix is a logical view for tests and export.
class IsingModel {
 public:
  static IsingModel from_rbm(const RbmModel& model);

  int n_hidden() const { return static_cast<int>(hidden_bias_.size()); }
  int n_visible() const { return static_cast<int>(weights_.rows()); }
  int size() const { return n_hidden() + n_visible(); }

  /// n_visible x n_hidden block; coupling(hidden j, visible i) = weights()(i, j).
  const RowMatrix& weights() const { return weights_; }
  const Eigen::VectorXd& hidden_bias() const { return hidden_bias_; }

  double coupling(int i, int j) const;
  double bias(int i) const { return i < n_hidden() ? hidden_bias_(i) : 0.0; }
  bool is_hidden(int i) const { return i < n_hidden(); }

  Eigen::MatrixXd dense_couplings() const;
  Eigen::VectorXd dense_bias() const;

  /// Header "N M n", then one "i value" line per bias, then "i j value" for
  /// every nonzero coupling with i < j, all 0-based.
  void write_text(std::ostream& out) const;

 private:
  RowMatrix weights_;
  Eigen::VectorXd hidden_bias_;
};

inline IsingModel map_rbm_to_ising(const RbmModel& model) { return IsingModel::from_rbm(model); }

double ising_energy(const IsingModel& ising, std::span<const Spin> m);

/// I_i = h_i + sum_j J_ij m_j. Flipping m_i from +1 to -1 raises the energy by 2 I_i.
double local_field(const IsingModel& ising, std::span<const Spin> m, int i);

}  // namespace isingnqs

#endif  // ISINGNQS_ISING_HPP
