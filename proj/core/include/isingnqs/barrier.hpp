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

#ifndef ISINGNQS_BARRIER_HPP
#define ISINGNQS_BARRIER_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "isingnqs/ising.hpp"
#include "isingnqs/rbm.hpp"
#include "isingnqs/samplers.hpp"

namespace isingnqs {

/// Energy change for negating m_i, 2 m_i (sum_j J_ij m_j + h_i).
double energy_barrier(const IsingModel& ising, std::span<const Spin> m, int i);

/// Average visible-spin barrier 2 s_i sum_j W_ij x_j over samples and sites.
/// The chain must carry hidden snapshots. Throws std::invalid_argument.
double mean_visible_barrier(const IsingModel& ising, const SpinChain& chain);

/// Per-visible-spin average over the chain, same convention as above.
std::vector<double> visible_barrier_profile(const IsingModel& ising, const SpinChain& chain);

/// (1/n) sum_ij |W_ij|.
double approx_barrier(const RbmModel& model);

/// (1/(alpha n^2)) sum_ij |W_ij|.
double mean_connection_strength(const RbmModel& model);

struct FlipRates {
  double visible = 0.0;
  double hidden = 0.0;
};

/// Fraction of spins that changed between consecutive stored snapshots.
/// Requires hidden snapshots and interval 1; throws std::invalid_argument.
FlipRates flip_rate(const SpinChain& chain);

struct BarrierReport {
  int n_spins = 0;
  int alpha = 0;
  std::string model_id;
  double mean_barrier = 0.0;
  double approx_barrier = 0.0;
  double mean_connection = 0.0;
  FlipRates flip_rates;
  double log_tau_sim = 0.0;
  std::vector<double> per_spin_barrier;
};

BarrierReport barrier_report(const RbmModel& model, const SpinChain& joint_chain, std::string model_id,
                             double tau_sim);

void write_barrier_csv_header(std::ostream& out);
void write_barrier_csv_row(std::ostream& out, const BarrierReport& report);

}  // namespace isingnqs

#endif  // ISINGNQS_BARRIER_HPP
