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

#include "isingnqs/autocorr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "isingnqs/errors.hpp"

namespace isingnqs {

namespace {

Eigen::VectorXd centered(std::span<const double> series) {
  // Copy into aligned storage so reductions do not depend on the caller's buffer address.
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(series.data(), static_cast<Eigen::Index>(series.size()));
  return x.array() - x.mean();
}

double lag_covariance(const Eigen::VectorXd& d, std::size_t lag) {
  const auto n = static_cast<Eigen::Index>(d.size());
  const auto c = static_cast<Eigen::Index>(lag);
  return d.head(n - c).dot(d.tail(n - c)) / static_cast<double>(n - c);
}

bool is_constant(std::span<const double> series) {
  return std::all_of(series.begin(), series.end(), [&](double v) { return v == series.front(); });
}

}  // namespace

double autocovariance(std::span<const double> series, std::size_t lag) {
  if (lag >= series.size()) throw std::out_of_range("autocovariance lag out of range");
  return lag_covariance(centered(series), lag);
}

ChainStatistics integrated_autocorr_time(std::span<const double> series, double spacing) {
  if (series.size() < 2 || is_constant(series)) {
    throw StuckChainError("zero-variance series: chain is stuck");
  }
  const Eigen::VectorXd d = centered(series);
  ChainStatistics stats;
  stats.n_samples = series.size();
  stats.spacing = spacing;
  stats.variance = lag_covariance(d, 0);
  if (!(stats.variance > 0.0)) throw StuckChainError("zero-variance series: chain is stuck");
  stats.rho.push_back(1.0);
  double tau = 0.5;
  const std::size_t max_lag = series.size() / 2;
  for (std::size_t m = 1; m <= max_lag; ++m) {
    const double rho = lag_covariance(d, m) / stats.variance;
    stats.rho.push_back(rho);
    tau += rho;
    if (static_cast<double>(m) >= 4.0 * tau + 1.0) {
      stats.cutoff = m;
      stats.tau_int = std::max(tau, 0.5);
      stats.tau_sweeps = stats.tau_int * spacing;
      return stats;
    }
  }
  throw std::runtime_error("no self-consistent autocorrelation window below N/2 = " +
                           std::to_string(max_lag) + "; chain too short");
}

StuckVerdict detect_stuck(std::span<const double> series, double max_run_fraction) {
  if (series.empty()) return {true, "empty series"};
  if (is_constant(series)) return {true, "zero variance"};
  std::size_t longest = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i < series.size(); ++i) {
    run = series[i] == series[i - 1] ? run + 1 : 1;
    longest = std::max(longest, run);
  }
  if (static_cast<double>(longest) > max_run_fraction * static_cast<double>(series.size())) {
    return {true, "constant run of " + std::to_string(longest) + " of " +
                      std::to_string(series.size()) + " samples"};
  }
  return {};
}

std::int64_t select_mh_interval(int n_spins) {
  if (n_spins <= 0) throw std::invalid_argument("spin count must be positive");
  return std::max<std::int64_t>(1, (static_cast<std::int64_t>(n_spins) + 99) / 100);
}

SimIntervalRule SimIntervalRule::for_alpha(int alpha) {
  SimIntervalRule rule;
  rule.min_tau_samples = alpha <= 2 ? 1.5 : 2.0;
  return rule;
}

SimIntervalChoice select_sim_interval(std::int64_t initial_interval, const SimIntervalRule& rule,
                                      const std::function<PilotMeasurement(std::int64_t)>& pilot) {
  if (initial_interval < 1) throw std::invalid_argument("initial interval must be >= 1");
  std::set<std::int64_t> tried;
  std::int64_t interval = initial_interval;
  for (int round = 1; round <= rule.max_rounds; ++round) {
    tried.insert(interval);
    const PilotMeasurement m = pilot(interval);
    const bool enough_tau = m.tau_samples > rule.min_tau_samples;
    const bool enough_times =
        m.tau_samples > 0.0 &&
        static_cast<double>(m.retained_samples) / m.tau_samples >= rule.min_autocorr_times;
    if (enough_times && (enough_tau || interval == 1)) {
      return {interval, round, m, !enough_tau};
    }
    std::int64_t next = interval;
    if (!enough_times) {
      next = interval * 2;
    } else {
      next = std::max<std::int64_t>(1, interval / 2);
    }
    if (next > rule.max_interval || tried.count(next) != 0) break;
    interval = next;
  }
  throw std::runtime_error("cannot choose an sIM sampling interval satisfying both pilot conditions");
}

MultiChainTau multi_chain_tau(std::span<const std::vector<double>> series,
                              std::span<const double> spacing) {
  if (series.size() != spacing.size()) {
    throw std::invalid_argument("one spacing per chain is required");
  }
  MultiChainTau out;
  out.per_chain_sweeps.assign(series.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> used;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const StuckVerdict verdict = detect_stuck(series[k]);
    if (verdict.stuck) {
      out.excluded.push_back({k, verdict.reason});
      continue;
    }
    try {
      const double tau = integrated_autocorr_time(series[k], spacing[k]).tau_sweeps;
      out.per_chain_sweeps[k] = tau;
      used.push_back(tau);
    } catch (const std::runtime_error& e) {
      out.excluded.push_back({k, e.what()});
    }
  }
  if (used.size() < 2) {
    throw ExclusionError("fewer than 2 usable chains for the autocorrelation time (" +
                         std::to_string(out.excluded.size()) + " excluded)");
  }
  double mean = 0.0;
  for (double t : used) mean += t;
  mean /= static_cast<double>(used.size());
  double ss = 0.0;
  for (double t : used) ss += (t - mean) * (t - mean);
  out.mean_sweeps = mean;
  out.spread = std::sqrt(ss / static_cast<double>(used.size() - 1) / static_cast<double>(used.size()));
  return out;
}

}  // namespace isingnqs
