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

#include "isingnqs/trainer.hpp"

#include <cmath>
#include <stdexcept>

#include "isingnqs/autocorr.hpp"
#include "isingnqs/errors.hpp"
#include "isingnqs/format.hpp"
#include "isingnqs/heisenberg.hpp"
#include "isingnqs/parallel.hpp"

namespace isingnqs {

std::string_view to_string(Preset preset) { return preset == Preset::Low ? "low" : "high"; }

Preset parse_preset(std::string_view text) {
  if (text == "low") return Preset::Low;
  if (text == "high") return Preset::High;
  throw std::invalid_argument("unknown preset '" + std::string(text) + "' (expected low or high)");
}

PresetParams preset_params(Preset preset) {
  if (preset == Preset::Low) return {2000, 1e-4, 0.9, 100.0};
  return {10000, 1e-3, 0.85, 10.0};
}

Preset preset_for(int n_spins, int alpha) {
  if (n_spins <= 100) return Preset::Low;
  if (n_spins <= 196) return alpha >= 8 ? Preset::High : Preset::Low;
  return Preset::High;
}

TrainConfig TrainConfig::from_preset(Preset preset) {
  const PresetParams p = preset_params(preset);
  TrainConfig cfg;
  cfg.preset = preset;
  cfg.n_samples = p.n_samples;
  cfg.eps = p.eps;
  cfg.eps0 = p.eps0;
  cfg.decay = p.decay;
  return cfg;
}

void TrainConfig::validate() const {
  if (!(eta >= 0.0)) throw std::invalid_argument("learning rate must be non-negative");
  if (iterations < 0) throw std::invalid_argument("iteration count must be non-negative");
  if (chains < 1) throw std::invalid_argument("need at least one chain");
  if (n_samples < 2 * chains) throw std::invalid_argument("need at least two samples per chain");
  if (!(eps >= 0.0) || !(eps0 >= 0.0) || !(decay > 0.0)) {
    throw std::invalid_argument("invalid regularization schedule");
  }
  if (thermalization < 0) throw std::invalid_argument("thermalization must be non-negative");
}

void write_history_csv(std::ostream& out, const TrainHistory& history, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "iter,energy,variance,eps_p,grad_norm\n";
  for (std::size_t p = 0; p < history.size(); ++p) {
    out << p << ',' << format_double(history.energy[p]) << ',' << format_double(history.variance[p])
        << ',' << format_double(history.eps[p]) << ',' << format_double(history.grad_norm[p]) << '\n';
  }
}

Eigen::MatrixXd sr_matrix(const Eigen::MatrixXd& o) {
  if (o.rows() < 2) throw std::invalid_argument("S matrix needs at least two samples");
  const Eigen::MatrixXd centered = o.rowwise() - o.colwise().mean();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(o.cols(), o.cols());
  s.selfadjointView<Eigen::Lower>().rankUpdate(centered.transpose(), 1.0 / static_cast<double>(o.rows()));
  s.triangularView<Eigen::StrictlyUpper>() = s.transpose();
  return s;
}

Eigen::VectorXd force_vector(const Eigen::MatrixXd& o, std::span<const double> e_loc) {
  if (static_cast<Eigen::Index>(e_loc.size()) != o.rows()) {
    throw std::invalid_argument("force vector needs one local energy per sample");
  }
  const Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(e_loc.data(), o.rows());
  const Eigen::VectorXd de = e.array() - e.mean();
  const Eigen::MatrixXd centered = o.rowwise() - o.colwise().mean();
  return centered.transpose() * de / static_cast<double>(o.rows());
}

double regularization_shift(const TrainConfig& cfg, int iteration) {
  return std::max(cfg.eps, cfg.eps0 * std::pow(cfg.decay, iteration));
}

Eigen::MatrixXd regularize(const Eigen::MatrixXd& s, double shift) {
  Eigen::MatrixXd out = s;
  out.diagonal().array() += shift;
  return out;
}

Eigen::VectorXd sr_direction(const Eigen::MatrixXd& s_reg, const Eigen::VectorXd& f) {
  Eigen::VectorXd delta;
  const Eigen::LLT<Eigen::MatrixXd> llt(s_reg);
  if (llt.info() == Eigen::Success) {
    delta = llt.solve(f);
  } else {
    delta = s_reg.ldlt().solve(f);
  }
  if (!delta.allFinite()) throw NumericalError("SR linear solve produced non-finite values");
  return delta;
}

SrStepInfo sr_step(RbmModel& model, const Eigen::MatrixXd& o, std::span<const double> e_loc,
                   int iteration, const TrainConfig& cfg) {
  SrStepInfo info;
  info.shift = regularization_shift(cfg, iteration);
  const Eigen::VectorXd f = force_vector(o, e_loc);
  info.grad_norm = f.norm();
  if (cfg.eta == 0.0) return info;
  const Eigen::VectorXd delta = sr_direction(regularize(sr_matrix(o), info.shift), f);
  Eigen::VectorXd params = model.parameters();
  params -= cfg.eta * delta;
  if (!params.allFinite()) throw NumericalError("SR update produced non-finite parameters");
  model.set_parameters(params);
  return info;
}

TrainResult train(const SquareLattice& lattice, int alpha, double J, const TrainConfig& cfg,
                  const TrainObserver& observer) {
  cfg.validate();
  const int n = lattice.size();
  Rng init_rng = make_stream(cfg.seed, 0);
  TrainResult result{RbmModel::random(n, alpha, cfg.init_scale, init_rng), {}};
  RbmModel& model = result.model;

  const auto k_params = static_cast<Eigen::Index>(model.n_params());
  const int per_chain = cfg.n_samples / cfg.chains;
  const int total = per_chain * cfg.chains;
  Eigen::MatrixXd o(total, k_params);
  std::vector<double> e_loc(total);

  std::vector<Rng> rngs;
  std::vector<SpinConfig> last(cfg.chains, neel_state(lattice));
  for (int c = 0; c < cfg.chains; ++c) rngs.push_back(make_stream(cfg.seed, 1 + c));

  for (int p = 0; p < cfg.iterations; ++p) {
    parallel_for(static_cast<std::size_t>(cfg.chains), cfg.threads, [&](std::size_t c) {
      MhState state(model, last[c]);
      Eigen::VectorXd grad(k_params);
      for (std::int64_t t = 0; t < cfg.thermalization; ++t) {
        mh_sweep(model, state, rngs[c], cfg.proposal, lattice.neighbors());
      }
      for (int k = 0; k < per_chain; ++k) {
        mh_sweep(model, state, rngs[c], cfg.proposal, lattice.neighbors());
        const auto row = static_cast<Eigen::Index>(c) * per_chain + k;
        e_loc[row] = local_energy(lattice.bonds(), model, state.cache(), state.config(), J);
        log_derivatives(model, state.cache(), state.config(), grad);
        o.row(row) = grad.transpose();
      }
      last[c] = state.config();
    });
    for (int c = 0; c < cfg.chains; ++c) {
      const std::span<const double> chunk(e_loc.data() + static_cast<std::size_t>(c) * per_chain, per_chain);
      const StuckVerdict verdict = detect_stuck(chunk);
      if (verdict.stuck) {
        throw StuckChainError("training iteration " + std::to_string(p) + ", chain " +
                              std::to_string(c) + ": " + verdict.reason);
      }
    }
    double sum = 0.0;
    for (double e : e_loc) sum += e;
    const double mean = sum / total;
    double ss = 0.0;
    for (double e : e_loc) ss += (e - mean) * (e - mean);
    if (!std::isfinite(mean)) throw NumericalError("training energy diverged at iteration " + std::to_string(p));

    const SrStepInfo info = sr_step(model, o, e_loc, p, cfg);
    result.history.energy.push_back(mean);
    result.history.variance.push_back(ss / total);
    result.history.eps.push_back(info.shift);
    result.history.grad_norm.push_back(info.grad_norm);
    if (observer) observer(p, result.history);
  }
  return result;
}

}  // namespace isingnqs
