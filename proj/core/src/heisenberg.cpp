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

#include "isingnqs/heisenberg.hpp"

#include <array>
#include <cmath>

#include "isingnqs/errors.hpp"

namespace isingnqs {

double local_energy(std::span<const Bond> bonds, const RbmModel& model, const ThetaCache& cache,
                    std::span<const Spin> config, double J) {
  double diagonal = 0.0;
  double exchange = 0.0;
  for (const Bond& bond : bonds) {
    const int si = config[bond.a];
    const int sj = config[bond.b];
    diagonal += 0.25 * si * sj;
    if (si != sj) {
      const std::array<int, 2> pair{bond.a, bond.b};
      const double ratio = std::exp(log_psi_ratio(model, cache, config, pair));
      if (!std::isfinite(ratio)) {
        throw NumericalError("non-finite amplitude ratio in local energy");
      }
      exchange += ratio;
    }
  }
  return J * (diagonal - 0.5 * exchange);
}

double local_energy(const SquareLattice& lattice, const RbmModel& model,
                    std::span<const Spin> config, double J) {
  const ThetaCache cache(model, config);
  return local_energy(lattice.bonds(), model, cache, config, J);
}

double uniform_local_energy(std::span<const Bond> bonds, std::span<const Spin> config, double J) {
  double e = 0.0;
  for (const Bond& bond : bonds) {
    const int si = config[bond.a];
    const int sj = config[bond.b];
    e += 0.25 * si * sj - (si != sj ? 0.5 : 0.0);
  }
  return J * e;
}

}  // namespace isingnqs
