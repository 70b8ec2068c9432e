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

#include <CLI11.hpp>

#include <cstring>
#include <iostream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "commands.hpp"
#include "isingnqs/errors.hpp"
#include "isingnqs/parallel.hpp"
#include "manifest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitExclusion = 4;

std::string find_manifest(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--manifest") == 0 && i + 1 < argc) return argv[i + 1];
    if (std::strncmp(argv[i], "--manifest=", 11) == 0) return argv[i] + 11;
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  using isingnqs::cli::Manifest;
  Manifest m;
  m.threads = isingnqs::default_thread_count();
  std::string manifest_path;
  try {
    manifest_path = find_manifest(argc, argv);
    if (!manifest_path.empty()) m = isingnqs::cli::load_manifest(manifest_path, m);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Train RBM quantum states, sample them as Ising models, and analyze sampler efficiency"};
  app.require_subcommand(1);
  app.add_option("--manifest", manifest_path, "JSON manifest; flags override its values");
  app.add_option("--out", m.out, "Output directory (created if missing)");
  app.add_option("--seed", m.seed, "Master seed");
  app.add_option("--threads", m.threads, "Worker threads (default: ISING_NQS_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  auto* train = app.add_subcommand("train", "Train RBM replicas with stochastic reconfiguration");
  train->add_option("--L", m.L, "Lattice side length");
  train->add_option("--alpha", m.alpha, "Hidden-unit density M/n");
  train->add_option("--J", m.J, "Exchange coupling");
  train->add_option("--replicas", m.replicas, "Independent models to train");
  train->add_option("--preset", m.preset, "low, high or auto");
  train->add_option("--iterations", m.iterations, "SR iterations");
  train->add_option("--eta", m.eta, "Learning rate");
  train->add_option("--train-chains", m.train_chains, "MH chains per iteration");
  train->add_option("--thermalization", m.thermalization, "Sweeps discarded per iteration");
  train->add_option("--proposal", m.proposal, "global or neighbor");

  auto* sample = app.add_subcommand("sample", "Run MH and/or sIM chains on a trained model");
  sample->add_option("--model", m.models, "Model JSON")->expected(1);
  sample->add_option("--kind", m.kind, "mh, sim or both");
  sample->add_option("--chains", m.chains, "Chains per sampler");
  sample->add_option("--samples", m.samples, "Stored samples per chain");
  sample->add_option("--thermalization", m.thermalization, "Sweeps discarded before sampling");
  sample->add_option("--proposal", m.proposal, "global or neighbor");
  sample->add_option("--mh-interval", m.mh_interval, "Sweeps between MH samples (0: default rule)");
  sample->add_option("--sim-interval", m.sim_interval, "Sweeps between sIM samples (0: pilot search)");
  sample->add_flag("--record-hidden", m.record_hidden, "Store hidden snapshots of sIM chains");

  auto* analyze = app.add_subcommand("analyze", "Autocorrelation times, error curves and iso-accuracy ratio");
  analyze->add_option("--model", m.models, "Model JSON")->expected(1);
  analyze->add_option("--chains-dir", m.chains_dir, "Directory written by sample (default: --out)");
  analyze->add_option("--fit-window-mult", m.fit_window_mult, "Fit excludes eps below this many baseline stderrs");
  analyze->add_option("--baseline-chains", m.baseline_chains, "Baseline MH chains");
  analyze->add_option("--baseline-sweeps", m.baseline_sweeps, "Sweeps per baseline chain");
  analyze->add_option("--grid-per-decade", m.grid_per_decade, "Curve grid density");
  analyze->add_option("--thermalization", m.thermalization, "Baseline thermalization sweeps");

  auto* project = app.add_subcommand("project", "Hardware runtime projection table");
  project->add_option("--report", m.reports, "advantage.json files from analyze");
  project->add_option("--point", m.points, "Explicit n_spins:ratio columns");
  project->add_option("--alpha", m.alpha, "Hidden density for --point columns");
  project->add_option("--profile", m.profiles, "Extra profile name:seconds");
  project->add_flag("--measure-cpu", m.measure_cpu, "Add measured cpu_mh and cpu_sim rows");

  auto* barrier = app.add_subcommand("barrier", "Energy-barrier and flip-rate diagnostics");
  barrier->add_option("--model", m.models, "Model JSON files");
  barrier->add_option("--samples", m.samples, "sIM sweeps recorded at interval 1");
  barrier->add_option("--thermalization", m.thermalization, "Sweeps discarded first");

  auto* oracle = app.add_subcommand("oracle", "Exact reference energies");
  oracle->add_option("--L", m.L, "Lattice side length");
  oracle->add_option("--ring", m.ring, "Use an n-site ring instead of the square lattice");
  oracle->add_option("--J", m.J, "Exchange coupling");
  oracle->add_option("--model", m.models, "Models whose exact variational energy to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train) isingnqs::cli::cmd_train(m);
    if (*sample) isingnqs::cli::cmd_sample(m);
    if (*analyze) isingnqs::cli::cmd_analyze(m);
    if (*project) isingnqs::cli::cmd_project(m);
    if (*barrier) isingnqs::cli::cmd_barrier(m);
    if (*oracle) isingnqs::cli::cmd_oracle(m);
  } catch (const isingnqs::ExclusionError& e) {
    std::cerr << "excluded: " << e.what() << '\n';
    return kExitExclusion;
  } catch (const isingnqs::StuckChainError& e) {
    std::cerr << "excluded: " << e.what() << '\n';
    return kExitExclusion;
  } catch (const isingnqs::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
