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

#ifndef ISINGNQS_ORACLE_HPP
#define ISINGNQS_ORACLE_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <span>
#include <vector>

#include "isingnqs/ising.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"

// Brute-force references for small systems. Enumerated states are indexed by
// bit patterns: bit i of the index is +1 for spin i.

namespace isingnqs::oracle {

inline constexpr int kMaxEnumeratedSpins = 20;
inline constexpr int kMaxVariationalSpins = 16;

SpinConfig config_from_index(std::uint64_t index, int n);
std::uint64_t index_from_config(std::span<const Spin> config);

struct VisibleDistribution {
  std::vector<double> probability;         // psi^2 over all 2^n states
  std::vector<double> sector_probability;  // restricted to magnetization 0, renormalized
};

/// Throws SizeGuardError for n > 20.
VisibleDistribution enumerate_visible_distribution(const RbmModel& model);

struct JointDistribution {
  int n_hidden = 0;
  int n_visible = 0;
  std::vector<double> probability;  // exp(-H)/Z over 2^(M+n) joint states, hidden bits lowest

  /// Sums out the hidden block; result indexed by the visible bit pattern.
  std::vector<double> visible_marginal() const;
};

/// Throws SizeGuardError for M + n > 20.
JointDistribution enumerate_joint_boltzmann(const IsingModel& ising);

/// Magnetization-0 basis states in increasing bit-pattern order.
class SectorBasis {
 public:
  /// Throws SizeGuardError for n > 20 and std::invalid_argument for odd n.
  explicit SectorBasis(int n_sites);

  int n_sites() const { return n_sites_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t state(std::size_t k) const { return states_[k]; }
  /// Position of a sector state; throws std::out_of_range otherwise.
  std::size_t index_of(std::uint64_t state) const;

 private:
  int n_sites_;
  std::vector<std::uint64_t> states_;
};

/// Sublattice-rotated Heisenberg matrix on the sector: diagonal J/4 sum s_i s_j,
/// exchange elements -J/2 between configurations differing by one
/// antiparallel bond.
Eigen::SparseMatrix<double> heisenberg_sector_matrix(const SectorBasis& basis,
                                                     std::span<const Bond> bonds, double J);

struct ExactSpectrumResult {
  double ground_energy = 0.0;
  std::size_t sector_dimension = 0;
  double residual = 0.0;  // ||H v - E v|| for the normalized eigenvector
  int iterations = 0;
  Eigen::VectorXd ground_state;
};

/// Lowest eigenvalue by restarted Lanczos. Throws NumericalError when the
/// residual stays above 1e-8.
ExactSpectrumResult exact_ground_energy(int n_sites, std::span<const Bond> bonds, double J);
ExactSpectrumResult exact_ground_energy(const SquareLattice& lattice, double J);

/// Dense reference for tiny sectors.
double dense_ground_energy(int n_sites, std::span<const Bond> bonds, double J);

/// Sum over the magnetization-0 sector of P(s) E_loc(s), P = psi^2
/// renormalized on the sector. Throws SizeGuardError for n > 16.
double exact_variational_energy(const RbmModel& model, std::span<const Bond> bonds, double J);
double exact_variational_energy(const RbmModel& model, const SquareLattice& lattice, double J);

/// <psi|H|psi> / <psi|psi> on the sector via the sparse Hamiltonian.
double rayleigh_quotient(const RbmModel& model, std::span<const Bond> bonds, double J);

/// Periodic ring of n sites; test geometry only.
std::vector<Bond> ring_bonds(int n);

}  // namespace isingnqs::oracle

#endif  // ISINGNQS_ORACLE_HPP
