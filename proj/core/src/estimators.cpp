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

#include "isingnqs/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "isingnqs/errors.hpp"
#include "isingnqs/format.hpp"
#include "isingnqs/heisenberg.hpp"
#include "isingnqs/parallel.hpp"

namespace isingnqs {

EnergyTrace energy_trace(const SpinChain& chain, const SquareLattice& lattice, const RbmModel& model,
                         double J) {
  EnergyTrace trace;
  trace.total_sweeps = chain.total_sweeps;
  trace.spacing = static_cast<double>(chain.interval) / chain.retained_fraction;
  trace.sweep = chain.sweep_index;
  trace.energy.reserve(chain.size());
  ThetaCache cache;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain.magnetizations[k] != 0) {
      throw std::invalid_argument("energy trace needs magnetization-0 samples; filter sIM chains first");
    }
    cache.rebuild(model, chain.samples[k]);
    trace.energy.push_back(local_energy(lattice.bonds(), model, cache, chain.samples[k], J));
  }
  return trace;
}

EnergyTrace mh_energy_trace(const SquareLattice& lattice, const RbmModel& model, double J,
                            const ChainConfig& cfg) {
  cfg.validate();
  Rng rng = make_stream(cfg.seed, cfg.stream);
  MhState state(model, neel_state(lattice));
  for (std::int64_t t = 0; t < cfg.thermalization_sweeps; ++t) {
    mh_sweep(model, state, rng, cfg.proposal, lattice.neighbors());
  }
  EnergyTrace trace;
  trace.total_sweeps = cfg.n_sweeps;
  trace.spacing = static_cast<double>(cfg.sample_interval);
  const auto n = static_cast<std::size_t>(cfg.n_sweeps / cfg.sample_interval);
  trace.sweep.reserve(n);
  trace.energy.reserve(n);
  for (std::int64_t t = 1; t <= cfg.n_sweeps; ++t) {
    mh_sweep(model, state, rng, cfg.proposal, lattice.neighbors());
    if (t % cfg.sample_interval == 0) {
      trace.sweep.push_back(t);
      trace.energy.push_back(local_energy(lattice.bonds(), model, state.cache(), state.config(), J));
    }
  }
  return trace;
}

EnergyTrace sim_energy_trace(const SquareLattice& lattice, const RbmModel& model, double J,
                             const ChainConfig& cfg) {
  cfg.validate();
  const IsingModel ising = IsingModel::from_rbm(model);
  Rng rng = make_stream(cfg.seed, cfg.stream);
  SimState state = SimState::random(ising, rng);
  for (std::int64_t t = 0; t < cfg.thermalization_sweeps; ++t) sim_sweep(ising, state, rng);
  EnergyTrace trace;
  trace.total_sweeps = cfg.n_sweeps;
  std::int64_t stored = 0;
  SpinConfig config(model.n_visible);
  ThetaCache cache;
  for (std::int64_t t = 1; t <= cfg.n_sweeps; ++t) {
    sim_sweep(ising, state, rng);
    if (t % cfg.sample_interval != 0) continue;
    ++stored;
    int m = 0;
    for (int i = 0; i < model.n_visible; ++i) {
      config[i] = state.visible(i) > 0 ? 1 : -1;
      m += config[i];
    }
    if (m != 0) continue;
    cache.rebuild(model, config);
    trace.sweep.push_back(t);
    trace.energy.push_back(local_energy(lattice.bonds(), model, cache, config, J));
  }
  const double retained =
      stored > 0 ? static_cast<double>(trace.energy.size()) / static_cast<double>(stored) : 0.0;
  trace.spacing = retained > 0 ? static_cast<double>(cfg.sample_interval) / retained : 0.0;
  return trace;
}

EnergyEstimate estimate_energy(std::span<const double> energies, double interval,
                               std::optional<double> tau_sweeps) {
  if (energies.empty()) throw std::invalid_argument("cannot estimate energy from an empty chain");
  EnergyEstimate est;
  est.n_samples = static_cast<std::int64_t>(energies.size());
  est.interval = interval;
  double sum = 0.0;
  for (double e : energies) sum += e;
  est.mean = sum / static_cast<double>(energies.size());
  double ss = 0.0;
  for (double e : energies) ss += (e - est.mean) * (e - est.mean);
  est.variance = ss / static_cast<double>(energies.size());
  est.tau = tau_sweeps;
  const auto n = static_cast<double>(est.n_samples);
  est.std_error = tau_sweeps ? std::sqrt(2.0 * *tau_sweeps / (n * interval) * est.variance)
                             : std::sqrt(est.variance / n);
  return est;
}

EnergyEstimate variational_energy(const SpinChain& chain, const SquareLattice& lattice,
                                  const RbmModel& model, double J, bool with_tau) {
  if (chain.samples.empty()) throw std::invalid_argument("cannot estimate energy from an empty chain");
  const EnergyTrace trace = energy_trace(chain, lattice, model, J);
  std::optional<double> tau;
  if (with_tau) tau = integrated_autocorr_time(trace.energy, trace.spacing).tau_sweeps;
  return estimate_energy(trace.energy, trace.spacing, tau);
}

std::string estimate_to_json(const EnergyEstimate& estimate) {
  nlohmann::ordered_json doc;
  doc["mean"] = estimate.mean;
  doc["variance"] = estimate.variance;
  doc["tau"] = estimate.tau ? nlohmann::ordered_json(*estimate.tau) : nlohmann::ordered_json(nullptr);
  doc["stderr"] = estimate.std_error;
  doc["n_samples"] = estimate.n_samples;
  return doc.dump(2) + "\n";
}

BaselineResult baseline_energy(const SquareLattice& lattice, const RbmModel& model, double J,
                               const BaselineConfig& cfg) {
  if (cfg.chains < 1) throw std::invalid_argument("baseline needs at least one chain");
  std::vector<EnergyTrace> traces(cfg.chains);
  parallel_for(traces.size(), cfg.threads, [&](std::size_t k) {
    ChainConfig chain_cfg;
    chain_cfg.n_sweeps = cfg.sweeps;
    chain_cfg.thermalization_sweeps = cfg.thermalization;
    chain_cfg.seed = cfg.seed;
    chain_cfg.stream = k;
    chain_cfg.proposal = cfg.proposal;
    traces[k] = mh_energy_trace(lattice, model, J, chain_cfg);
  });
  BaselineResult out;
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const StuckVerdict verdict = detect_stuck(traces[k].energy);
    if (verdict.stuck) {
      out.excluded.push_back({k, verdict.reason});
      continue;
    }
    double sum = 0.0;
    for (double e : traces[k].energy) sum += e;
    out.chain_means.push_back(sum / static_cast<double>(traces[k].energy.size()));
    total += sum;
    count += traces[k].energy.size();
  }
  if (out.chain_means.empty() ||
      static_cast<double>(out.excluded.size()) > cfg.max_excluded_fraction * cfg.chains) {
    throw ExclusionError("baseline: " + std::to_string(out.excluded.size()) + " of " +
                         std::to_string(cfg.chains) + " chains stuck");
  }
  out.used_chains = static_cast<int>(out.chain_means.size());
  out.energy = total / static_cast<double>(count);
  if (out.used_chains > 1) {
    double mean = 0.0;
    for (double m : out.chain_means) mean += m;
    mean /= out.used_chains;
    double ss = 0.0;
    for (double m : out.chain_means) ss += (m - mean) * (m - mean);
    out.std_error = std::sqrt(ss / (out.used_chains - 1) / out.used_chains);
  }
  return out;
}

std::vector<std::int64_t> log_grid(std::int64_t n_min, std::int64_t n_max, int per_decade) {
  if (n_min < 1 || n_max < n_min || per_decade < 1) {
    throw std::invalid_argument("log grid needs 1 <= n_min <= n_max and per_decade >= 1");
  }
  std::vector<std::int64_t> grid;
  for (int k = 0;; ++k) {
    const double value = static_cast<double>(n_min) * std::pow(10.0, static_cast<double>(k) / per_decade);
    const auto n = static_cast<std::int64_t>(std::llround(value));
    if (n > n_max) break;
    if (grid.empty() || n > grid.back()) grid.push_back(n);
  }
  if (grid.back() != n_max && static_cast<double>(n_max) / static_cast<double>(grid.back()) >
                                  std::pow(10.0, 0.5 / per_decade)) {
    grid.push_back(n_max);
  }
  return grid;
}

ErrorCurve relative_error_curve(std::span<const EnergyTrace> traces, double baseline,
                                std::span<const std::int64_t> grid) {
  if (baseline == 0.0) throw std::domain_error("relative error undefined for a zero baseline");
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("grid must be increasing");
  // Prefix sums per trace; sweeps are increasing within a trace.
  std::vector<std::vector<double>> prefix(traces.size());
  for (std::size_t k = 0; k < traces.size(); ++k) {
    prefix[k].resize(traces[k].energy.size() + 1, 0.0);
    for (std::size_t i = 0; i < traces[k].energy.size(); ++i) {
      prefix[k][i + 1] = prefix[k][i] + traces[k].energy[i];
    }
  }
  ErrorCurve curve;
  curve.baseline_energy = baseline;
  for (std::int64_t n : grid) {
    std::vector<double> eps;
    for (std::size_t k = 0; k < traces.size(); ++k) {
      const auto& sweeps = traces[k].sweep;
      const auto count = static_cast<std::size_t>(
          std::upper_bound(sweeps.begin(), sweeps.end(), n) - sweeps.begin());
      if (count == 0 || n > traces[k].total_sweeps) continue;
      const double mean = prefix[k][count] / static_cast<double>(count);
      eps.push_back(std::abs((mean - baseline) / baseline));
    }
    if (eps.empty()) continue;
    CurvePoint p;
    p.n = n;
    for (double e : eps) p.eps_rel += e;
    p.eps_rel /= static_cast<double>(eps.size());
    if (eps.size() > 1) {
      double ss = 0.0;
      for (double e : eps) ss += (e - p.eps_rel) * (e - p.eps_rel);
      p.eps_rel_stderr = std::sqrt(ss / static_cast<double>(eps.size() - 1) / static_cast<double>(eps.size()));
    }
    curve.points.push_back(p);
  }
  return curve;
}

InverseSqrtFit fit_inverse_sqrt(const ErrorCurve& curve, const FitWindow& window) {
  std::vector<double> x;
  std::vector<double> y;
  InverseSqrtFit fit;
  for (const CurvePoint& p : curve.points) {
    if (p.n < window.n_min || p.n > window.n_max) continue;
    if (!(p.eps_rel > window.multiplier * window.floor) || !(p.eps_rel > 0.0)) continue;
    if (x.empty()) fit.first_n = p.n;
    fit.last_n = p.n;
    x.push_back(std::log(static_cast<double>(p.n)));
    y.push_back(std::log(p.eps_rel));
  }
  if (x.size() < 3) {
    throw std::invalid_argument("inverse-sqrt fit needs at least 3 points above the noise floor, got " +
                                std::to_string(x.size()));
  }
  const auto count = static_cast<double>(x.size());
  double log_a = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) log_a += y[i] + 0.5 * x[i];
  log_a /= count;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (log_a - 0.5 * x[i]);
    ss += r * r;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  fit.a = std::exp(log_a);
  fit.free_slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.free_intercept = my - fit.free_slope * mx;
  fit.rms_log_residual = std::sqrt(ss / count);
  fit.n_points = x.size();
  fit.poor_fit = std::abs(fit.free_slope + 0.5) > 0.15 || fit.rms_log_residual > std::log(2.0);
  return fit;
}

ErrorCurve predicted_sim_curve(double a, double tau_sim, double tau_mh,
                               std::span<const std::int64_t> grid) {
  if (!(tau_sim > 0.0) || !(tau_mh > 0.0)) throw std::invalid_argument("autocorrelation times must be positive");
  const double scale = std::sqrt(tau_sim / tau_mh);
  ErrorCurve curve;
  for (std::int64_t n : grid) {
    curve.points.push_back({n, scale * a / std::sqrt(static_cast<double>(n)), 0.0});
  }
  return curve;
}

void write_curve_csv(std::ostream& out, const ErrorCurve& curve, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "N,eps_rel,eps_rel_stderr\n";
  for (const CurvePoint& p : curve.points) {
    out << p.n << ',' << format_double(p.eps_rel) << ',' << format_double(p.eps_rel_stderr) << '\n';
  }
}

}  // namespace isingnqs
