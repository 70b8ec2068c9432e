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

#include "isingnqs/ising.hpp"

#include <stdexcept>
#include <string>

#include "isingnqs/format.hpp"

namespace isingnqs {

IsingModel IsingModel::from_rbm(const RbmModel& model) {
  model.validate();
  IsingModel ising;
  ising.weights_ = model.W;
  ising.hidden_bias_ = model.b;
  return ising;
}

double IsingModel::coupling(int i, int j) const {
  const int M = n_hidden();
  if (i < M && j >= M) return weights_(j - M, i);
  if (j < M && i >= M) return weights_(i - M, j);
  return 0.0;
}

Eigen::MatrixXd IsingModel::dense_couplings() const {
  const int M = n_hidden();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(size(), size());
  J.block(0, M, M, n_visible()) = weights_.transpose();
  J.block(M, 0, n_visible(), M) = weights_;
  return J;
}

Eigen::VectorXd IsingModel::dense_bias() const {
  Eigen::VectorXd h = Eigen::VectorXd::Zero(size());
  h.head(n_hidden()) = hidden_bias_;
  return h;
}

void IsingModel::write_text(std::ostream& out) const {
  const int M = n_hidden();
  out << size() << ' ' << M << ' ' << n_visible() << '\n';
  for (int i = 0; i < size(); ++i) out << i << ' ' << format_double(bias(i)) << '\n';
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < n_visible(); ++i) {
      if (weights_(i, j) != 0.0) out << j << ' ' << M + i << ' ' << format_double(weights_(i, j)) << '\n';
    }
  }
}

namespace {

void check_joint(const IsingModel& ising, std::span<const Spin> m) {
  if (static_cast<int>(m.size()) != ising.size()) {
    throw std::invalid_argument("joint configuration has length " + std::to_string(m.size()) +
                                ", expected " + std::to_string(ising.size()));
  }
}

}  // namespace

double ising_energy(const IsingModel& ising, std::span<const Spin> m) {
  check_joint(ising, m);
  const int M = ising.n_hidden();
  double e = 0.0;
  for (int j = 0; j < M; ++j) {
    double field = ising.hidden_bias()(j);
    for (int i = 0; i < ising.n_visible(); ++i) field += ising.weights()(i, j) * m[M + i];
    e -= field * m[j];
  }
  return e;
}

double local_field(const IsingModel& ising, std::span<const Spin> m, int i) {
  check_joint(ising, m);
  if (i < 0 || i >= ising.size()) throw std::out_of_range("spin index out of range");
  const int M = ising.n_hidden();
  double field = 0.0;
  if (i < M) {
    field = ising.hidden_bias()(i);
    for (int v = 0; v < ising.n_visible(); ++v) field += ising.weights()(v, i) * m[M + v];
  } else {
    const auto row = ising.weights().row(i - M);
    for (int j = 0; j < M; ++j) field += row(j) * m[j];
  }
  return field;
}

}  // namespace isingnqs
