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

#include "isingnqs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isingnqs/errors.hpp"
#include "isingnqs/heisenberg.hpp"

namespace isingnqs::oracle {

namespace {

void guard(int spins, int limit, const char* what) {
  if (spins > limit) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(spins) +
                         " spins exceeds the enumeration limit of " + std::to_string(limit));
  }
}

std::vector<double> normalized_exp(const std::vector<double>& log_weight) {
  const double top = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> p(log_weight.size());
  double z = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = std::exp(log_weight[k] - top);
    z += p[k];
  }
  for (double& v : p) v /= z;
  return p;
}

}  // namespace

SpinConfig config_from_index(std::uint64_t index, int n) {
  SpinConfig s(n);
  for (int i = 0; i < n; ++i) s[i] = (index >> i) & 1u ? 1 : -1;
  return s;
}

std::uint64_t index_from_config(std::span<const Spin> config) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (config[i] > 0) index |= std::uint64_t{1} << i;
  }
  return index;
}

VisibleDistribution enumerate_visible_distribution(const RbmModel& model) {
  guard(model.n_visible, kMaxEnumeratedSpins, "visible enumeration");
  const std::uint64_t count = std::uint64_t{1} << model.n_visible;
  std::vector<double> log_w(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    log_w[k] = 2.0 * log_psi(model, config_from_index(k, model.n_visible));
  }
  VisibleDistribution out;
  out.probability = normalized_exp(log_w);
  out.sector_probability.assign(count, 0.0);
  double z = 0.0;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (2 * std::popcount(k) == model.n_visible) z += out.probability[k];
  }
  for (std::uint64_t k = 0; k < count; ++k) {
    if (2 * std::popcount(k) == model.n_visible) out.sector_probability[k] = out.probability[k] / z;
  }
  return out;
}

std::vector<double> JointDistribution::visible_marginal() const {
  std::vector<double> marginal(std::size_t{1} << n_visible, 0.0);
  for (std::size_t k = 0; k < probability.size(); ++k) marginal[k >> n_hidden] += probability[k];
  return marginal;
}

JointDistribution enumerate_joint_boltzmann(const IsingModel& ising) {
  guard(ising.size(), kMaxEnumeratedSpins, "joint Boltzmann enumeration");
  const std::uint64_t count = std::uint64_t{1} << ising.size();
  std::vector<double> log_w(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    log_w[k] = -ising_energy(ising, config_from_index(k, ising.size()));
  }
  return {ising.n_hidden(), ising.n_visible(), normalized_exp(log_w)};
}

SectorBasis::SectorBasis(int n_sites) : n_sites_(n_sites) {
  guard(n_sites, kMaxEnumeratedSpins, "sector basis");
  if (n_sites <= 0 || n_sites % 2 != 0) throw std::invalid_argument("sector basis needs an even spin count");
  const std::uint64_t count = std::uint64_t{1} << n_sites;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (2 * std::popcount(k) == n_sites) states_.push_back(k);
  }
}

std::size_t SectorBasis::index_of(std::uint64_t state) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), state);
  if (it == states_.end() || *it != state) throw std::out_of_range("state outside the sector");
  return static_cast<std::size_t>(it - states_.begin());
}

Eigen::SparseMatrix<double> heisenberg_sector_matrix(const SectorBasis& basis,
                                                     std::span<const Bond> bonds, double J) {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(basis.size() * (bonds.size() / 2 + 1));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::uint64_t s = basis.state(k);
    double diagonal = 0.0;
    for (const Bond& bond : bonds) {
      const bool a = (s >> bond.a) & 1u;
      const bool b = (s >> bond.b) & 1u;
      if (a == b) {
        diagonal += 0.25 * J;
      } else {
        diagonal -= 0.25 * J;
        const std::uint64_t flipped = s ^ (std::uint64_t{1} << bond.a) ^ (std::uint64_t{1} << bond.b);
        entries.emplace_back(static_cast<int>(k), static_cast<int>(basis.index_of(flipped)), -0.5 * J);
      }
    }
    entries.emplace_back(static_cast<int>(k), static_cast<int>(k), diagonal);
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::SparseMatrix<double> h(dim, dim);
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

namespace {

/// Lowest Ritz pair of the tridiagonal matrix (alpha, beta).
std::pair<double, Eigen::VectorXd> lowest_ritz(const std::vector<double>& alpha,
                                               const std::vector<double>& beta) {
  const auto m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                              : Eigen::VectorXd();
  if (m == 1) return {diag(0), Eigen::VectorXd::Ones(1)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

}  // namespace

ExactSpectrumResult exact_ground_energy(int n_sites, std::span<const Bond> bonds, double J) {
  const SectorBasis basis(n_sites);
  const Eigen::SparseMatrix<double> h = heisenberg_sector_matrix(basis, bonds, J);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  ExactSpectrumResult result;
  result.sector_dimension = basis.size();

  // Deterministic start with a positive bias toward the uniform vector, which
  // overlaps the non-negative ground state of the rotated matrix.
  Eigen::VectorXd start(dim);
  for (Eigen::Index k = 0; k < dim; ++k) start(k) = 1.0 + 0.1 * std::sin(0.7 * static_cast<double>(k) + 0.3);
  const int max_krylov = static_cast<int>(std::min<Eigen::Index>(dim, 250));

  for (int restart = 0; restart < 20; ++restart) {
    start.normalize();
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXd prev = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd v = start;
    double last_ritz = 0.0;
    for (int j = 0; j < max_krylov; ++j) {
      Eigen::VectorXd w = h * v;
      const double a = v.dot(w);
      alpha.push_back(a);
      w -= a * v;
      if (j > 0) w -= beta.back() * prev;
      const double b = w.norm();
      ++result.iterations;
      const double ritz = lowest_ritz(alpha, beta).first;
      const bool converged = j > 2 && std::abs(ritz - last_ritz) < 1e-14 * std::max(1.0, std::abs(ritz));
      last_ritz = ritz;
      if (converged || b < 1e-13 || j + 1 == max_krylov) break;
      beta.push_back(b);
      prev = v;
      v = w / b;
    }
    beta.resize(alpha.size() - 1);
    const auto [energy, coeffs] = lowest_ritz(alpha, beta);

    // Second pass rebuilds the Ritz vector from the same recurrence.
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    prev.setZero();
    v = start;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      x += coeffs(static_cast<Eigen::Index>(j)) * v;
      if (j + 1 == alpha.size()) break;
      Eigen::VectorXd w = h * v - alpha[j] * v;
      if (j > 0) w -= beta[j - 1] * prev;
      prev = v;
      v = w / beta[j];
    }
    x.normalize();
    const Eigen::VectorXd hx = h * x;
    const double rq = x.dot(hx);
    result.ground_energy = rq;
    result.residual = (hx - rq * x).norm();
    if (result.residual < 1e-8) {
      if (x.sum() < 0) x = -x;
      result.ground_state = x;
      (void)energy;
      return result;
    }
    start = x;
  }
  throw NumericalError("Lanczos did not converge: residual " + std::to_string(result.residual));
}

ExactSpectrumResult exact_ground_energy(const SquareLattice& lattice, double J) {
  return exact_ground_energy(lattice.size(), lattice.bonds(), J);
}

double dense_ground_energy(int n_sites, std::span<const Bond> bonds, double J) {
  const SectorBasis basis(n_sites);
  if (basis.size() > 4000) throw SizeGuardError("dense diagonalization limited to 4000 states");
  const Eigen::MatrixXd h = Eigen::MatrixXd(heisenberg_sector_matrix(basis, bonds, J));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double exact_variational_energy(const RbmModel& model, std::span<const Bond> bonds, double J) {
  guard(model.n_visible, kMaxVariationalSpins, "exact variational energy");
  const SectorBasis basis(model.n_visible);
  std::vector<double> log_w(basis.size());
  std::vector<double> e_loc(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const SpinConfig s = config_from_index(basis.state(k), model.n_visible);
    const ThetaCache cache(model, s);
    log_w[k] = 2.0 * log_psi(model, s);
    e_loc[k] = local_energy(bonds, model, cache, s, J);
  }
  const std::vector<double> p = normalized_exp(log_w);
  double e = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) e += p[k] * e_loc[k];
  return e;
}

double exact_variational_energy(const RbmModel& model, const SquareLattice& lattice, double J) {
  return exact_variational_energy(model, lattice.bonds(), J);
}

double rayleigh_quotient(const RbmModel& model, std::span<const Bond> bonds, double J) {
  const SectorBasis basis(model.n_visible);
  std::vector<double> log_psi_values(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    log_psi_values[k] = log_psi(model, config_from_index(basis.state(k), model.n_visible));
  }
  const double top = *std::max_element(log_psi_values.begin(), log_psi_values.end());
  Eigen::VectorXd psi(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) psi(static_cast<Eigen::Index>(k)) = std::exp(log_psi_values[k] - top);
  const Eigen::SparseMatrix<double> h = heisenberg_sector_matrix(basis, bonds, J);
  return psi.dot(h * psi) / psi.squaredNorm();
}

std::vector<Bond> ring_bonds(int n) {
  std::vector<Bond> bonds;
  for (int i = 0; i < n; ++i) bonds.push_back({i, (i + 1) % n});
  return bonds;
}

}  // namespace isingnqs::oracle
