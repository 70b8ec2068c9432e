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

#ifndef ISINGNQS_TRAINER_HPP
#define ISINGNQS_TRAINER_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"
#include "isingnqs/samplers.hpp"

namespace isingnqs {

enum class Preset { Low, High };

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view text);

/// Sample count and diagonal-shift schedule eps(p) = max(eps, eps0 * decay^p).
struct PresetParams {
  int n_samples = 2000;
  double eps = 1e-4;
  double decay = 0.9;
  double eps0 = 100.0;
};

PresetParams preset_params(Preset preset);

/// Preset used for a given system size and hidden density (low: 2000 samples,
/// high: 10000 samples).
Preset preset_for(int n_spins, int alpha);

struct TrainConfig {
  double eta = 0.005;
  int iterations = 400;
  Preset preset = Preset::Low;
  int n_samples = 2000;
  double eps = 1e-4;
  double eps0 = 100.0;
  double decay = 0.9;
  std::int64_t thermalization = kDefaultThermalizationSweeps;
  std::uint64_t seed = 0;
  double init_scale = 0.01;
  int chains = 1;  // MH chains sharing n_samples per iteration
  PairProposal proposal = PairProposal::Global;
  unsigned threads = 1;

  static TrainConfig from_preset(Preset preset);
  void validate() const;
};

struct TrainHistory {
  std::vector<double> energy;
  std::vector<double> variance;
  std::vector<double> eps;
  std::vector<double> grad_norm;

  std::size_t size() const { return energy.size(); }
};

/// CSV `iter,energy,variance,eps_p,grad_norm`.
void write_history_csv(std::ostream& out, const TrainHistory& history, const std::string& comment = {});

/// S_kk' = <O_k O_k'> - <O_k><O_k'> over the rows of `o` (one row per sample).
Eigen::MatrixXd sr_matrix(const Eigen::MatrixXd& o);

/// F_k = <E_loc O_k> - <E_loc><O_k>.
Eigen::VectorXd force_vector(const Eigen::MatrixXd& o, std::span<const double> e_loc);

double regularization_shift(const TrainConfig& cfg, int iteration);

/// S + shift * I.
Eigen::MatrixXd regularize(const Eigen::MatrixXd& s, double shift);

/// Solves s_reg * delta = f by Cholesky (LDLT fallback). Throws NumericalError
/// when the result is not finite.
Eigen::VectorXd sr_direction(const Eigen::MatrixXd& s_reg, const Eigen::VectorXd& f);

struct SrStepInfo {
  double shift = 0.0;
  double grad_norm = 0.0;
};

/// One stochastic-reconfiguration update of `model` in place:
/// params <- params - eta * (S + eps(p) I)^{-1} F.
SrStepInfo sr_step(RbmModel& model, const Eigen::MatrixXd& o, std::span<const double> e_loc,
                   int iteration, const TrainConfig& cfg);

struct TrainResult {
  RbmModel model;
  TrainHistory history;
};

/// Called after every iteration with (iteration, history so far).
using TrainObserver = std::function<void(int, const TrainHistory&)>;

/// Variational ground-state optimization: each iteration thermalizes the MH
/// chains for cfg.thermalization sweeps, records cfg.n_samples samples one
/// sweep apart, and applies sr_step. Throws StuckChainError if an
/// iteration's energies are stuck and NumericalError on divergence.
TrainResult train(const SquareLattice& lattice, int alpha, double J, const TrainConfig& cfg,
                  const TrainObserver& observer = {});

}  // namespace isingnqs

#endif  // ISINGNQS_TRAINER_HPP
