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

#ifndef ISINGNQS_HEISENBERG_HPP
#define ISINGNQS_HEISENBERG_HPP

#include <span>

#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"

namespace isingnqs {

/// Local energy of the spin-1/2 Heisenberg model H = J sum_<ij> S_i . S_j in
/// the sublattice-rotated basis where the ground state is non-negative:
///
///   E_loc(s) = J sum_bonds [ s_i s_j / 4 - 1/2 [s_i != s_j] psi(s^(ij)) / psi(s) ]
///
/// Throws NumericalError if an amplitude ratio is not finite.
double local_energy(std::span<const Bond> bonds, const RbmModel& model, const ThetaCache& cache,
                    std::span<const Spin> config, double J);

double local_energy(const SquareLattice& lattice, const RbmModel& model,
                    std::span<const Spin> config, double J);

/// The diagonal plus off-diagonal terms with every amplitude ratio set to 1.
double uniform_local_energy(std::span<const Bond> bonds, std::span<const Spin> config, double J);

}  // namespace isingnqs

#endif  // ISINGNQS_HEISENBERG_HPP
