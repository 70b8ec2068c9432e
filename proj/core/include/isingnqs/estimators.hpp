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

#ifndef ISINGNQS_ESTIMATORS_HPP
#define ISINGNQS_ESTIMATORS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "isingnqs/autocorr.hpp"
#include "isingnqs/ising.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"
#include "isingnqs/samplers.hpp"

namespace isingnqs {

/// Local energies of the stored samples of one chain, with the sweep after
/// which each was taken. `spacing` is the mean number of sweeps between
/// entries (interval / retained fraction for filtered sIM chains).
struct EnergyTrace {
  std::vector<std::int64_t> sweep;
  std::vector<double> energy;
  std::int64_t total_sweeps = 0;
  double spacing = 1.0;
};

/// Throws std::invalid_argument for sIM chains that still contain samples
/// outside the magnetization-0 sector.
EnergyTrace energy_trace(const SpinChain& chain, const SquareLattice& lattice, const RbmModel& model,
                         double J);

/// MH chain whose local energies are evaluated on the fly without storing configurations.
EnergyTrace mh_energy_trace(const SquareLattice& lattice, const RbmModel& model, double J,
                            const ChainConfig& cfg);
/// sIM chain, magnetization-filtered, local energies evaluated on retained samples.
EnergyTrace sim_energy_trace(const SquareLattice& lattice, const RbmModel& model, double J,
                             const ChainConfig& cfg);

struct EnergyEstimate {
  double mean = 0.0;
  double variance = 0.0;
  std::int64_t n_samples = 0;
  double interval = 1.0;               // sweeps per sample
  std::optional<double> tau;           // in sweeps
  double std_error = 0.0;                // sqrt(2 tau / (N interval) Var); sqrt(Var / N) without tau
};

/// Mean and population variance of `energies`. Throws std::invalid_argument when empty.
EnergyEstimate estimate_energy(std::span<const double> energies, double interval = 1.0,
                               std::optional<double> tau_sweeps = std::nullopt);

/// Sample mean of E_loc over the chain; sIM chains must already be filtered.
/// With `with_tau` the integrated autocorrelation time is attached.
EnergyEstimate variational_energy(const SpinChain& chain, const SquareLattice& lattice,
                                  const RbmModel& model, double J, bool with_tau = false);

std::string estimate_to_json(const EnergyEstimate& estimate);

struct BaselineConfig {
  int chains = 32;
  std::int64_t sweeps = 10000;
  std::int64_t thermalization = kDefaultThermalizationSweeps;
  std::uint64_t seed = 0;
  PairProposal proposal = PairProposal::Global;
  unsigned threads = 1;
  double max_excluded_fraction = 0.5;
};

struct BaselineResult {
  double energy = 0.0;
  double std_error = 0.0;  // spread of chain means over sqrt(used chains)
  int used_chains = 0;
  std::vector<double> chain_means;
  std::vector<ChainExclusion> excluded;
};

/// Grand mean of E_loc over independent MH chains. Stuck chains are excluded;
/// throws ExclusionError when more than max_excluded_fraction of them are.
BaselineResult baseline_energy(const SquareLattice& lattice, const RbmModel& model, double J,
                               const BaselineConfig& cfg);

struct CurvePoint {
  std::int64_t n = 0;
  double eps_rel = 0.0;
  double eps_rel_stderr = 0.0;
};

struct ErrorCurve {
  std::vector<CurvePoint> points;
  double baseline_energy = 0.0;
};

/// Logarithmic grid with `per_decade` points per decade between n_min and n_max.
std::vector<std::int64_t> log_grid(std::int64_t n_min, std::int64_t n_max, int per_decade = 20);

/// eps_rel(N) = |E(N) - E_b| / |E_b|, E(N) the running mean over samples taken
/// within the first N sweeps, averaged over traces. Grid points with no sample
/// in any trace are dropped. Throws std::domain_error for E_b = 0.
ErrorCurve relative_error_curve(std::span<const EnergyTrace> traces, double baseline,
                                std::span<const std::int64_t> grid);

struct FitWindow {
  /// Points with eps_rel <= multiplier * floor are excluded; floor is the
  /// relative standard error of the baseline.
  double floor = 0.0;
  double multiplier = 5.0;
  std::int64_t n_min = 1;
  std::int64_t n_max = std::numeric_limits<std::int64_t>::max();
};

struct InverseSqrtFit {
  double a = 0.0;  // eps_fit(N) = a / sqrt(N)
  double free_slope = 0.0;
  double free_intercept = 0.0;
  double rms_log_residual = 0.0;  // of the fixed-slope fit
  std::size_t n_points = 0;
  std::int64_t first_n = 0;
  std::int64_t last_n = 0;
  bool poor_fit = false;  // free slope off -1/2 by more than 0.15, or rms residual > log 2
};

/// Least squares of log eps against log N with the slope fixed at -1/2.
/// Throws std::invalid_argument with fewer than 3 points in the window.
InverseSqrtFit fit_inverse_sqrt(const ErrorCurve& curve, const FitWindow& window = {});

/// sqrt(tau_sim / tau_mh) * a / sqrt(N) on `grid`.
ErrorCurve predicted_sim_curve(double a, double tau_sim, double tau_mh,
                               std::span<const std::int64_t> grid);

/// CSV `N,eps_rel,eps_rel_stderr`.
void write_curve_csv(std::ostream& out, const ErrorCurve& curve, const std::string& comment = {});

}  // namespace isingnqs

#endif  // ISINGNQS_ESTIMATORS_HPP
