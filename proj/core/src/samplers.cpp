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

#include "isingnqs/samplers.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isingnqs/errors.hpp"

namespace isingnqs {

std::string_view to_string(ChainKind kind) { return kind == ChainKind::Mh ? "mh" : "sim"; }

ChainKind parse_chain_kind(std::string_view text) {
  if (text == "mh") return ChainKind::Mh;
  if (text == "sim") return ChainKind::Sim;
  throw std::invalid_argument("unknown chain kind '" + std::string(text) + "' (expected mh or sim)");
}

std::string_view to_string(PairProposal proposal) {
  return proposal == PairProposal::Global ? "global" : "neighbor";
}

PairProposal parse_pair_proposal(std::string_view text) {
  if (text == "global") return PairProposal::Global;
  if (text == "neighbor") return PairProposal::NearestNeighbor;
  throw std::invalid_argument("unknown pair proposal '" + std::string(text) +
                              "' (expected global or neighbor)");
}

void ChainConfig::validate() const {
  if (n_sweeps < 1) throw std::invalid_argument("n_sweeps must be positive");
  if (thermalization_sweeps < 0) throw std::invalid_argument("thermalization_sweeps must be >= 0");
  if (sample_interval < 1) throw std::invalid_argument("sample_interval must be >= 1");
}

MhState::MhState(const RbmModel& model, SpinConfig initial)
    : config_(std::move(initial)), cache_(model, config_), slot_(config_.size()) {
  for (int i = 0; i < static_cast<int>(config_.size()); ++i) {
    auto& list = config_[i] > 0 ? up_ : down_;
    slot_[i] = static_cast<int>(list.size());
    list.push_back(i);
  }
}

void MhState::exchange(const RbmModel& model, int i, int k) {
  const std::array<int, 2> pair{i, k};
  apply_flips(model, cache_, config_, pair);
  // i and k trade places between the up and down lists.
  auto& list_i = config_[i] > 0 ? up_ : down_;
  auto& list_k = config_[k] > 0 ? up_ : down_;
  const int si = slot_[i];
  const int sk = slot_[k];
  list_i[sk] = i;
  list_k[si] = k;
  slot_[i] = sk;
  slot_[k] = si;
}

int mh_sweep(const RbmModel& model, MhState& state, Rng& rng, PairProposal proposal,
             std::span<const Neighbors> neighbors) {
  const auto n = static_cast<std::uint64_t>(state.config().size());
  if (state.up_sites().empty() || state.down_sites().empty()) {
    throw std::logic_error("MH sweep needs an antiparallel pair; state is fully polarized");
  }
  if (proposal == PairProposal::NearestNeighbor && neighbors.size() != n) {
    throw std::invalid_argument("nearest-neighbor proposals need the lattice neighbor table");
  }
  int accepted = 0;
  for (std::uint64_t step = 0; step < n; ++step) {
    const int i = static_cast<int>(uniform_index(rng, n));
    int k;
    if (proposal == PairProposal::Global) {
      const auto others = state.config()[i] > 0 ? state.down_sites() : state.up_sites();
      k = others[uniform_index(rng, others.size())];
    } else {
      k = neighbors[i][uniform_index(rng, 4)];
      if (state.config()[k] == state.config()[i]) continue;
    }
    const std::array<int, 2> pair{i, k};
    const double log_accept = 2.0 * log_psi_ratio(model, state.cache(), state.config(), pair);
    if (log_accept >= 0.0 || uniform01(rng) < std::exp(log_accept)) {
      state.exchange(model, i, k);
      ++accepted;
    }
  }
  return accepted;
}

SimState SimState::random(const IsingModel& ising, Rng& rng) {
  SimState s;
  s.hidden.resize(ising.n_hidden());
  s.visible.resize(ising.n_visible());
  for (Eigen::Index j = 0; j < s.hidden.size(); ++j) s.hidden(j) = uniform01(rng) < 0.5 ? 1.0 : -1.0;
  for (Eigen::Index i = 0; i < s.visible.size(); ++i) s.visible(i) = uniform01(rng) < 0.5 ? 1.0 : -1.0;
  return s;
}

namespace {

SpinConfig to_config(const Eigen::VectorXd& v) {
  SpinConfig s(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) s[i] = v(i) > 0 ? 1 : -1;
  return s;
}

int resample_block(const Eigen::VectorXd& field, Eigen::VectorXd& spins, Rng& rng) {
  int flipped = 0;
  for (Eigen::Index j = 0; j < spins.size(); ++j) {
    const double next = uniform01(rng) < gibbs_up_probability(field(j)) ? 1.0 : -1.0;
    flipped += next != spins(j);
    spins(j) = next;
  }
  return flipped;
}

}  // namespace

SpinConfig SimState::visible_config() const { return to_config(visible); }
SpinConfig SimState::hidden_config() const { return to_config(hidden); }

SpinConfig SimState::joint_config() const {
  SpinConfig joint = hidden_config();
  const SpinConfig v = visible_config();
  joint.insert(joint.end(), v.begin(), v.end());
  return joint;
}

SimFlips sim_sweep(const IsingModel& ising, SimState& state, Rng& rng) {
  SimFlips flips;
  const Eigen::VectorXd hidden_field =
      ising.hidden_bias() + ising.weights().transpose() * state.visible;
  flips.hidden = resample_block(hidden_field, state.hidden, rng);
  const Eigen::VectorXd visible_field = ising.weights() * state.hidden;
  flips.visible = resample_block(visible_field, state.visible, rng);
  return flips;
}

SpinChain run_mh_chain(const RbmModel& model, const ChainConfig& cfg, SpinConfig initial,
                       std::span<const Neighbors> neighbors) {
  cfg.validate();
  model.validate();
  if (magnetization(initial) != 0) {
    throw std::invalid_argument("MH chains start in the magnetization-0 sector");
  }
  Rng rng = make_stream(cfg.seed, cfg.stream);
  MhState state(model, std::move(initial));
  for (std::int64_t t = 0; t < cfg.thermalization_sweeps; ++t) {
    mh_sweep(model, state, rng, cfg.proposal, neighbors);
  }
  SpinChain chain;
  chain.kind = ChainKind::Mh;
  chain.n_visible = model.n_visible;
  chain.interval = cfg.sample_interval;
  chain.total_sweeps = cfg.n_sweeps;
  const auto n_samples = static_cast<std::size_t>(cfg.n_sweeps / cfg.sample_interval);
  chain.samples.reserve(n_samples);
  std::int64_t accepted = 0;
  for (std::int64_t t = 1; t <= cfg.n_sweeps; ++t) {
    accepted += mh_sweep(model, state, rng, cfg.proposal, neighbors);
    if (t % cfg.sample_interval == 0) {
      chain.samples.push_back(state.config());
      chain.sweep_index.push_back(t);
      chain.magnetizations.push_back(0);
    }
  }
  chain.acceptance_or_flip_rate =
      static_cast<double>(accepted) / (static_cast<double>(cfg.n_sweeps) * model.n_visible);
  return chain;
}

SpinChain run_sim_chain(const IsingModel& ising, const ChainConfig& cfg) {
  cfg.validate();
  Rng rng = make_stream(cfg.seed, cfg.stream);
  SimState state = SimState::random(ising, rng);
  for (std::int64_t t = 0; t < cfg.thermalization_sweeps; ++t) sim_sweep(ising, state, rng);
  SpinChain chain;
  chain.kind = ChainKind::Sim;
  chain.n_visible = ising.n_visible();
  chain.interval = cfg.sample_interval;
  chain.total_sweeps = cfg.n_sweeps;
  std::int64_t flipped = 0;
  for (std::int64_t t = 1; t <= cfg.n_sweeps; ++t) {
    const SimFlips f = sim_sweep(ising, state, rng);
    flipped += f.hidden + f.visible;
    if (t % cfg.sample_interval == 0) {
      chain.samples.push_back(state.visible_config());
      chain.sweep_index.push_back(t);
      chain.magnetizations.push_back(magnetization(chain.samples.back()));
      if (cfg.record_hidden) chain.hidden.push_back(state.hidden_config());
    }
  }
  chain.acceptance_or_flip_rate =
      static_cast<double>(flipped) / (static_cast<double>(cfg.n_sweeps) * ising.size());
  return chain;
}

namespace {

SpinConfig alternating_state(int n) {
  SpinConfig s(n);
  for (int i = 0; i < n; ++i) s[i] = i % 2 == 0 ? 1 : -1;
  return s;
}

}  // namespace

SpinChain run_chain(ChainKind kind, const RbmModel& model, const ChainConfig& cfg,
                    const SquareLattice& lattice) {
  if (lattice.size() != model.n_visible) {
    throw std::invalid_argument("lattice size does not match the model's visible count");
  }
  if (kind == ChainKind::Sim) return run_sim_chain(IsingModel::from_rbm(model), cfg);
  return run_mh_chain(model, cfg, neel_state(lattice), lattice.neighbors());
}

SpinChain run_chain(ChainKind kind, const RbmModel& model, const ChainConfig& cfg) {
  if (kind == ChainKind::Sim) return run_sim_chain(IsingModel::from_rbm(model), cfg);
  if (model.n_visible % 2 != 0) throw std::invalid_argument("MH chains need an even spin count");
  if (cfg.proposal == PairProposal::NearestNeighbor) {
    throw std::invalid_argument("nearest-neighbor proposals need a lattice");
  }
  return run_mh_chain(model, cfg, alternating_state(model.n_visible));
}

SpinChain filter_magnetization_zero(const SpinChain& chain) {
  SpinChain out;
  out.kind = chain.kind;
  out.n_visible = chain.n_visible;
  out.interval = chain.interval;
  out.total_sweeps = chain.total_sweeps;
  out.acceptance_or_flip_rate = chain.acceptance_or_flip_rate;
  const bool keep_hidden = chain.hidden.size() == chain.samples.size();
  for (std::size_t k = 0; k < chain.samples.size(); ++k) {
    if (chain.magnetizations[k] != 0) continue;
    out.samples.push_back(chain.samples[k]);
    out.sweep_index.push_back(chain.sweep_index[k]);
    out.magnetizations.push_back(0);
    if (keep_hidden) out.hidden.push_back(chain.hidden[k]);
  }
  if (out.samples.empty()) {
    throw ExclusionError("no magnetization-0 samples in chain of " +
                         std::to_string(chain.samples.size()));
  }
  out.retained_fraction = chain.retained_fraction * static_cast<double>(out.samples.size()) /
                          static_cast<double>(chain.samples.size());
  return out;
}

}  // namespace isingnqs
