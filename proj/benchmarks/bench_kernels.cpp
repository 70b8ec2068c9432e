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

#include <benchmark/benchmark.h>

#include "isingnqs/heisenberg.hpp"
#include "isingnqs/ising.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/rbm.hpp"
#include "isingnqs/samplers.hpp"

namespace {

using namespace isingnqs;

RbmModel bench_model(int L, int alpha) {
  Rng rng = make_stream(3, 0);
  return RbmModel::random(L * L, alpha, 0.1, rng);
}

void BM_MhSweep(benchmark::State& st) {
  const SquareLattice lattice = SquareLattice::build(static_cast<int>(st.range(0)));
  const RbmModel model = bench_model(lattice.side(), static_cast<int>(st.range(1)));
  Rng rng = make_stream(4, 0);
  MhState state(model, neel_state(lattice));
  for (auto _ : st) mh_sweep(model, state, rng);
  st.SetItemsProcessed(st.iterations());
}

void BM_SimSweep(benchmark::State& st) {
  const RbmModel model = bench_model(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  const IsingModel ising = map_rbm_to_ising(model);
  Rng rng = make_stream(5, 0);
  SimState state = SimState::random(ising, rng);
  for (auto _ : st) sim_sweep(ising, state, rng);
  st.SetItemsProcessed(st.iterations());
}

void BM_LocalEnergy(benchmark::State& st) {
  const SquareLattice lattice = SquareLattice::build(static_cast<int>(st.range(0)));
  const RbmModel model = bench_model(lattice.side(), static_cast<int>(st.range(1)));
  const SpinConfig s = neel_state(lattice);
  ThetaCache cache(model, s);
  for (auto _ : st) benchmark::DoNotOptimize(local_energy(lattice.bonds(), model, cache, s, 1.0));
}

}  // namespace

BENCHMARK(BM_MhSweep)->Args({4, 2})->Args({6, 2})->Args({4, 4});
BENCHMARK(BM_SimSweep)->Args({4, 2})->Args({6, 2})->Args({4, 4});
BENCHMARK(BM_LocalEnergy)->Args({4, 2})->Args({6, 2})->Args({4, 4});

BENCHMARK_MAIN();
