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

#include "isingnqs/barrier.hpp"

#include <cmath>
#include <stdexcept>

#include "isingnqs/format.hpp"

namespace isingnqs {

double energy_barrier(const IsingModel& ising, std::span<const Spin> m, int i) {
  if (i < 0 || i >= ising.size()) throw std::out_of_range("spin index out of range");
  return 2.0 * m[i] * local_field(ising, m, i);
}

namespace {

void require_joint(const SpinChain& chain, const IsingModel& ising) {
  if (chain.samples.empty()) throw std::invalid_argument("empty chain");
  if (chain.hidden.size() != chain.samples.size()) {
    throw std::invalid_argument("chain has no hidden snapshots; record them to analyze barriers");
  }
  if (chain.n_visible != ising.n_visible()) throw std::invalid_argument("chain and model sizes differ");
}

}  // namespace

std::vector<double> visible_barrier_profile(const IsingModel& ising, const SpinChain& chain) {
  require_joint(chain, ising);
  const RowMatrix& w = ising.weights();
  const int n = ising.n_visible();
  const int m = ising.n_hidden();
  std::vector<double> profile(n, 0.0);
  Eigen::VectorXd x(m);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    for (int j = 0; j < m; ++j) x(j) = chain.hidden[k][j];
    const Eigen::VectorXd field = w * x;
    for (int i = 0; i < n; ++i) profile[i] += 2.0 * chain.samples[k][i] * field(i);
  }
  for (double& v : profile) v /= static_cast<double>(chain.size());
  return profile;
}

double mean_visible_barrier(const IsingModel& ising, const SpinChain& chain) {
  const std::vector<double> profile = visible_barrier_profile(ising, chain);
  double sum = 0.0;
  for (double v : profile) sum += v;
  return sum / static_cast<double>(profile.size());
}

double approx_barrier(const RbmModel& model) {
  return model.W.cwiseAbs().sum() / model.n_visible;
}

double mean_connection_strength(const RbmModel& model) {
  const double n = model.n_visible;
  return model.W.cwiseAbs().sum() / (model.alpha * n * n);
}

FlipRates flip_rate(const SpinChain& chain) {
  if (chain.interval != 1) throw std::invalid_argument("flip rates need snapshots at interval 1");
  if (chain.hidden.size() != chain.samples.size()) throw std::invalid_argument("chain has no hidden snapshots");
  if (chain.size() < 2) throw std::invalid_argument("flip rates need at least two snapshots");
  std::int64_t visible_changes = 0;
  std::int64_t hidden_changes = 0;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    for (std::size_t i = 0; i < chain.samples[k].size(); ++i) visible_changes += chain.samples[k][i] != chain.samples[k - 1][i];
    for (std::size_t j = 0; j < chain.hidden[k].size(); ++j) hidden_changes += chain.hidden[k][j] != chain.hidden[k - 1][j];
  }
  const double transitions = static_cast<double>(chain.size() - 1);
  FlipRates rates;
  rates.visible = visible_changes / (transitions * static_cast<double>(chain.samples[0].size()));
  rates.hidden = chain.hidden[0].empty() ? 0.0 : hidden_changes / (transitions * static_cast<double>(chain.hidden[0].size()));
  return rates;
}

BarrierReport barrier_report(const RbmModel& model, const SpinChain& joint_chain, std::string model_id,
                             double tau_sim) {
  const IsingModel ising = IsingModel::from_rbm(model);
  BarrierReport report;
  report.n_spins = model.n_visible;
  report.alpha = model.alpha;
  report.model_id = std::move(model_id);
  report.per_spin_barrier = visible_barrier_profile(ising, joint_chain);
  double sum = 0.0;
  for (double v : report.per_spin_barrier) sum += v;
  report.mean_barrier = sum / static_cast<double>(report.per_spin_barrier.size());
  report.approx_barrier = approx_barrier(model);
  report.mean_connection = mean_connection_strength(model);
  report.flip_rates = flip_rate(joint_chain);
  report.log_tau_sim = tau_sim > 0 ? std::log(tau_sim) : std::nan("");
  return report;
}

void write_barrier_csv_header(std::ostream& out) {
  out << "n_spins,alpha,model_id,mean_barrier,approx_barrier,mean_connection,visible_flip_rate,"
         "hidden_flip_rate,log_tau_sim\n";
}

void write_barrier_csv_row(std::ostream& out, const BarrierReport& r) {
  out << r.n_spins << ',' << r.alpha << ',' << r.model_id << ',' << format_double(r.mean_barrier) << ','
      << format_double(r.approx_barrier) << ',' << format_double(r.mean_connection) << ','
      << format_double(r.flip_rates.visible) << ',' << format_double(r.flip_rates.hidden) << ','
      << format_double(r.log_tau_sim) << '\n';
}

}  // namespace isingnqs
