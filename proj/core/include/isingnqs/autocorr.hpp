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

#ifndef ISINGNQS_AUTOCORR_HPP
#define ISINGNQS_AUTOCORR_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace isingnqs {

/// Autocorrelation analysis of one observable series.
struct ChainStatistics {
  std::size_t n_samples = 0;
  double variance = 0.0;     // Gamma_0
  std::vector<double> rho;   // rho_0 .. rho_cutoff
  double tau_int = 0.5;      // in samples
  std::size_t cutoff = 0;    // smallest M with M >= 4 tau_int(M) + 1
  double spacing = 1.0;      // sweeps per sample
  double tau_sweeps = 0.5;   // tau_int * spacing
};

/// Gamma_c = 1/(N-c) sum_{i<N-c} (O_i - mean)(O_{i+c} - mean), mean over the
/// full series. Throws std::out_of_range unless c < N.
double autocovariance(std::span<const double> series, std::size_t lag);

/// Integrated autocorrelation time tau_int = 1/2 + sum_{c=1}^{M} rho_c with the
/// self-consistent window: M grows until M >= 4 tau_int(M) + 1. `spacing` is
/// the number of sweeps between consecutive entries; use the mean spacing for
/// filtered series. The reported tau_int is floored at 1/2.
///
/// Throws StuckChainError for a constant series and std::runtime_error when no
/// admissible window exists below N/2.
ChainStatistics integrated_autocorr_time(std::span<const double> series, double spacing = 1.0);

struct StuckVerdict {
  bool stuck = false;
  std::string reason;
};

/// A chain is stuck when its series is constant or when the longest run of
/// identical consecutive values is longer than `max_run_fraction` of it.
StuckVerdict detect_stuck(std::span<const double> series, double max_run_fraction = 0.5);

/// Sweeps between stored MH samples: ceil(max(0.01 n, 1)).
std::int64_t select_mh_interval(int n_spins);

struct PilotMeasurement {
  double tau_samples = 0.0;          // tau_int of the filtered series
  std::size_t retained_samples = 0;  // magnetization-0 samples in the pilot
};

struct SimIntervalRule {
  double min_autocorr_times = 1500.0;
  /// Required tau in samples: 2, relaxed to 1.5 for alpha <= 2.
  double min_tau_samples = 2.0;
  int max_rounds = 12;
  std::int64_t max_interval = 1 << 20;

  static SimIntervalRule for_alpha(int alpha);
};

struct SimIntervalChoice {
  std::int64_t interval = 1;
  int rounds = 0;
  PilotMeasurement measurement;
  /// True when the tau condition was waived because the interval is already 1.
  bool at_floor = false;
};

/// Adjusts the sIM sampling interval until the pilot chain holds at least
/// rule.min_autocorr_times autocorrelation times and its tau (in samples)
/// exceeds rule.min_tau_samples. Too small a tau halves the interval; too few
/// autocorrelation times doubles it. At interval 1 the tau condition cannot be
/// improved further and is waived. Throws std::runtime_error on failure.
SimIntervalChoice select_sim_interval(std::int64_t initial_interval, const SimIntervalRule& rule,
                                      const std::function<PilotMeasurement(std::int64_t)>& pilot);

struct ChainExclusion {
  std::size_t chain = 0;
  std::string reason;
};

struct MultiChainTau {
  double mean_sweeps = 0.0;
  double spread = 0.0;  // standard error over used chains
  std::vector<double> per_chain_sweeps;  // NaN for excluded chains
  std::vector<ChainExclusion> excluded;
};

/// Per-chain tau in sweeps (tau_int * spacing[k]) averaged over chains that
/// are not stuck. Throws ExclusionError with fewer than 2 usable chains.
MultiChainTau multi_chain_tau(std::span<const std::vector<double>> series,
                              std::span<const double> spacing);

}  // namespace isingnqs

#endif  // ISINGNQS_AUTOCORR_HPP
