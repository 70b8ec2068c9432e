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

#ifndef ISINGNQS_SAMPLERS_HPP
#define ISINGNQS_SAMPLERS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "isingnqs/ising.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"
#include "isingnqs/rng.hpp"

namespace isingnqs {

enum class ChainKind { Mh, Sim };

/// How MH picks the antiparallel pair to exchange. Global: a uniform site i,
/// then a uniform site among all sites antiparallel to it. NearestNeighbor: a
/// uniform site and a uniform lattice neighbor; parallel picks count as
/// rejected attempts.
enum class PairProposal { Global, NearestNeighbor };

std::string_view to_string(ChainKind kind);
ChainKind parse_chain_kind(std::string_view text);
std::string_view to_string(PairProposal proposal);
PairProposal parse_pair_proposal(std::string_view text);

inline constexpr std::int64_t kDefaultThermalizationSweeps = 200;

struct ChainConfig {
  std::int64_t n_sweeps = 10000;  // after thermalization
  std::int64_t thermalization_sweeps = kDefaultThermalizationSweeps;
  std::int64_t sample_interval = 1;  // sweeps between stored samples
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // chain index within a run
  PairProposal proposal = PairProposal::Global;
  bool record_hidden = false;  // sIM only: also store hidden snapshots

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Visible snapshots of one Markov chain. Sample k was taken after sweep
/// sweep_index[k] (1-based, thermalization excluded).
struct SpinChain {
  ChainKind kind = ChainKind::Mh;
  int n_visible = 0;
  std::int64_t interval = 1;
  std::int64_t total_sweeps = 0;
  std::vector<SpinConfig> samples;
  std::vector<std::int64_t> sweep_index;
  std::vector<int> magnetizations;
  std::vector<SpinConfig> hidden;
  /// MH: accepted / attempted exchanges. sIM: changed spins / updated spins.
  double acceptance_or_flip_rate = 0.0;
  /// Fraction kept by filter_magnetization_zero; 1 for unfiltered chains.
  double retained_fraction = 1.0;

  std::size_t size() const { return samples.size(); }
};

/// Visible configuration with its theta cache and the up/down site lists
/// that make global pair proposals O(1).
class MhState {
 public:
  MhState(const RbmModel& model, SpinConfig initial);

  const SpinConfig& config() const { return config_; }
  const ThetaCache& cache() const { return cache_; }
  std::span<const int> up_sites() const { return up_; }
  std::span<const int> down_sites() const { return down_; }

  void exchange(const RbmModel& model, int i, int k);

 private:
  SpinConfig config_;
  ThetaCache cache_;
  std::vector<int> up_;
  std::vector<int> down_;
  std::vector<int> slot_;
};

/// n pair-exchange attempts accepted with probability min(1, |psi'/psi|^2).
/// Returns the number accepted. Throws std::logic_error when the state has
/// no antiparallel pair. `neighbors` is required for NearestNeighbor.
int mh_sweep(const RbmModel& model, MhState& state, Rng& rng,
             PairProposal proposal = PairProposal::Global, std::span<const Neighbors> neighbors = {});

/// Joint sIM state; spins stored as +-1.0 for the block matrix-vector products.
struct SimState {
  Eigen::VectorXd hidden;
  Eigen::VectorXd visible;

  static SimState random(const IsingModel& ising, Rng& rng);
  SpinConfig visible_config() const;
  SpinConfig hidden_config() const;
  SpinConfig joint_config() const;  // [hidden, visible]
};

struct SimFlips {
  int hidden = 0;
  int visible = 0;
};

/// P(spin = +1) = 1 / (1 + exp(-2 I)) for local field I.
inline double gibbs_up_probability(double field) { return 1.0 / (1.0 + std::exp(-2.0 * field)); }

/// Chromatic Gibbs sweep: every hidden spin resampled given the visible block,
/// then every visible spin given the fresh hidden block.
SimFlips sim_sweep(const IsingModel& ising, SimState& state, Rng& rng);

/// MH chain from `initial` (must have magnetization 0).
SpinChain run_mh_chain(const RbmModel& model, const ChainConfig& cfg, SpinConfig initial,
                       std::span<const Neighbors> neighbors = {});
/// sIM chain from a uniformly random joint state.
SpinChain run_sim_chain(const IsingModel& ising, const ChainConfig& cfg);

/// MH starts from the Neel state of `lattice`; sIM ignores the lattice.
SpinChain run_chain(ChainKind kind, const RbmModel& model, const ChainConfig& cfg,
                    const SquareLattice& lattice);
/// Lattice-free variant for toy models: MH starts from +-+-... .
SpinChain run_chain(ChainKind kind, const RbmModel& model, const ChainConfig& cfg);

/// Keeps samples with zero magnetization. Sweep bookkeeping is preserved so
/// step counts still refer to unfiltered sweeps. Throws ExclusionError when
/// nothing is retained.
SpinChain filter_magnetization_zero(const SpinChain& chain);

}  // namespace isingnqs

#endif  // ISINGNQS_SAMPLERS_HPP
