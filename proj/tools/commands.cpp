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

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isingnqs/advantage.hpp"
#include "isingnqs/autocorr.hpp"
#include "isingnqs/barrier.hpp"
#include "isingnqs/chain_io.hpp"
#include "isingnqs/errors.hpp"
#include "isingnqs/estimators.hpp"
#include "isingnqs/format.hpp"
#include "isingnqs/model_io.hpp"
#include "isingnqs/oracle.hpp"
#include "isingnqs/parallel.hpp"
#include "isingnqs/rng.hpp"
#include "isingnqs/samplers.hpp"
#include "isingnqs/trainer.hpp"

namespace isingnqs::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

enum SeedStream : std::uint64_t {
  kMhChains = 1,
  kSimChains = 2,
  kSimPilot = 3,
  kBaseline = 4,
  kBarrier = 5,
  kCpuBench = 6,
  kTrainReplica = 100,
};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) { return make_stream(master, stream)(); }

struct Provenance {
  std::string hash;
  std::uint64_t seed = 0;

  std::string comment() const { return "manifest_hash=" + hash + " seed=" + std::to_string(seed); }
  void stamp(ordered_json& doc) const {
    doc["manifest_hash"] = hash;
    doc["seed"] = seed;
  }
};

fs::path prepare_out(const Manifest& m) {
  const fs::path out(m.out);
  fs::create_directories(out);
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_json(const fs::path& path, const ordered_json& doc) { write_text(path, doc.dump(2) + "\n"); }

ordered_json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return ordered_json::parse(in);
}

std::string indexed(const std::string& stem, std::size_t k, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02zu", k);
  return stem + buf + ext;
}

const std::string& single_model(const Manifest& m) {
  if (m.models.empty()) throw std::invalid_argument("--model is required");
  return m.models.front();
}

std::vector<double> energies_of(const SpinChain& chain, const SquareLattice& lattice, const ModelFile& file) {
  return energy_trace(chain, lattice, file.model, file.J).energy;
}

SpinChain sim_filtered(const SpinChain& chain) { return filter_magnetization_zero(chain); }

ordered_json exclusions_json(const std::vector<ChainExclusion>& excluded) {
  ordered_json list = ordered_json::array();
  for (const ChainExclusion& e : excluded) list.push_back({{"chain", e.chain}, {"reason", e.reason}});
  return list;
}

ordered_json nullable(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

void cmd_train(const Manifest& m) {
  const SquareLattice lattice = SquareLattice::build(m.L);
  if (m.alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  if (m.replicas < 1) throw std::invalid_argument("replicas must be at least 1");
  const Preset preset = m.preset == "auto" ? preset_for(lattice.size(), m.alpha) : parse_preset(m.preset);
  TrainConfig base = TrainConfig::from_preset(preset);
  base.iterations = m.iterations;
  base.eta = m.eta;
  base.chains = m.train_chains;
  base.thermalization = m.thermalization;
  base.proposal = parse_pair_proposal(m.proposal);
  base.threads = 1;
  base.validate();

  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("train", m), m.seed};
  std::vector<TrainResult> results(m.replicas);
  std::vector<std::uint64_t> seeds(m.replicas);
  for (int r = 0; r < m.replicas; ++r) seeds[r] = derive_seed(m.seed, kTrainReplica + r);
  parallel_for(static_cast<std::size_t>(m.replicas), m.threads, [&](std::size_t r) {
    TrainConfig cfg = base;
    cfg.seed = seeds[r];
    results[r] = train(lattice, m.alpha, m.J, cfg);
  });

  for (int r = 0; r < m.replicas; ++r) {
    const TrainHistory& h = results[r].history;
    ModelFile file;
    file.L = m.L;
    file.J = m.J;
    file.rng_seed = seeds[r];
    file.model = results[r].model;
    file.training_meta.preset = std::string(to_string(preset));
    file.training_meta.iterations = m.iterations;
    file.training_meta.eta = m.eta;
    file.training_meta.final_energy = h.size() ? h.energy.back() : 0.0;
    file.training_meta.final_variance = h.size() ? h.variance.back() : 0.0;
    file.training_meta.manifest_hash = prov.hash;
    save_model(out / indexed("model_r", r, ".json"), file);
    std::ofstream hist(out / indexed("history_r", r, ".csv"), std::ios::binary);
    write_history_csv(hist, h, prov.comment() + " replica_seed=" + std::to_string(seeds[r]));
    std::cout << "replica " << r << ": E/site " << format_double(file.training_meta.final_energy / lattice.size())
              << '\n';
  }
}

void cmd_sample(const Manifest& m) {
  const ModelFile file = load_model(single_model(m));
  const SquareLattice lattice = SquareLattice::build(file.L);
  const IsingModel ising = IsingModel::from_rbm(file.model);
  if (m.chains < 1 || m.samples < 2) throw std::invalid_argument("need at least one chain and two samples");
  const bool want_mh = m.kind == "mh" || m.kind == "both";
  const bool want_sim = m.kind == "sim" || m.kind == "both";
  if (!want_mh && !want_sim) throw std::invalid_argument("--kind must be mh, sim or both");
  const PairProposal proposal = parse_pair_proposal(m.proposal);

  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("sample", m), m.seed};
  ordered_json index;
  prov.stamp(index);
  index["model_hash"] = file_hash(single_model(m));
  index["L"] = file.L;
  index["alpha"] = file.model.alpha;
  index["n_hidden"] = file.model.n_hidden();
  std::ostringstream exclusions;
  exclusions << "# " << prov.comment() << "\nkind,chain,reason\n";

  auto run_kind = [&](ChainKind kind, const ChainConfig& proto, ordered_json& section) {
    std::vector<SpinChain> chains(m.chains);
    parallel_for(chains.size(), m.threads, [&](std::size_t c) {
      ChainConfig cfg = proto;
      cfg.stream = c;
      chains[c] = run_chain(kind, file.model, cfg, lattice);
    });
    const std::string stem = kind == ChainKind::Mh ? "chain_mh_" : "chain_sim_";
    ordered_json files = ordered_json::array();
    ordered_json rates = ordered_json::array();
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const std::string name = indexed(stem, c, ".csv");
      std::ofstream f(out / name, std::ios::binary);
      write_chain_csv(f, chains[c], prov.comment() + " stream=" + std::to_string(c));
      files.push_back(name);
      rates.push_back(chains[c].acceptance_or_flip_rate);
      std::string reason;
      try {
        const SpinChain used = kind == ChainKind::Sim ? sim_filtered(chains[c]) : chains[c];
        reason = detect_stuck(energies_of(used, lattice, file)).reason;
      } catch (const ExclusionError& e) {
        reason = e.what();
      }
      if (!reason.empty()) exclusions << to_string(kind) << ',' << c << ',' << reason << '\n';
    }
    section["interval"] = proto.sample_interval;
    section["sweeps"] = proto.n_sweeps;
    section["thermalization"] = proto.thermalization_sweeps;
    section["files"] = files;
    section[kind == ChainKind::Mh ? "acceptance" : "flip_rate"] = rates;
  };

  if (want_mh) {
    ChainConfig cfg;
    cfg.sample_interval = m.mh_interval > 0 ? m.mh_interval : select_mh_interval(lattice.size());
    cfg.n_sweeps = m.samples * cfg.sample_interval;
    cfg.thermalization_sweeps = m.thermalization;
    cfg.seed = derive_seed(m.seed, kMhChains);
    cfg.proposal = proposal;
    cfg.validate();
    ordered_json section;
    section["proposal"] = std::string(to_string(proposal));
    run_kind(ChainKind::Mh, cfg, section);
    index["mh"] = section;
  }
  if (want_sim) {
    ordered_json section;
    std::int64_t interval = m.sim_interval;
    if (interval <= 0) {
      const std::uint64_t pilot_seed = derive_seed(m.seed, kSimPilot);
      auto pilot = [&](std::int64_t k) {
        ChainConfig cfg;
        cfg.sample_interval = k;
        cfg.n_sweeps = m.samples * k;
        cfg.thermalization_sweeps = m.thermalization;
        cfg.seed = pilot_seed;
        cfg.stream = static_cast<std::uint64_t>(k);
        const SpinChain kept = sim_filtered(run_sim_chain(ising, cfg));
        const std::vector<double> e = energies_of(kept, lattice, file);
        return PilotMeasurement{integrated_autocorr_time(e).tau_int, e.size()};
      };
      const SimIntervalChoice choice = select_sim_interval(1, SimIntervalRule::for_alpha(file.model.alpha), pilot);
      interval = choice.interval;
      section["interval_rounds"] = choice.rounds;
      section["pilot_tau_samples"] = choice.measurement.tau_samples;
      section["pilot_retained"] = choice.measurement.retained_samples;
      section["tau_condition_waived"] = choice.at_floor;
    }
    ChainConfig cfg;
    cfg.sample_interval = interval;
    cfg.n_sweeps = m.samples * interval;
    cfg.thermalization_sweeps = m.thermalization;
    cfg.seed = derive_seed(m.seed, kSimChains);
    cfg.record_hidden = m.record_hidden;
    cfg.validate();
    section["record_hidden"] = m.record_hidden;
    run_kind(ChainKind::Sim, cfg, section);
    index["sim"] = section;
  }
  write_json(out / "chains.json", index);
  write_text(out / "exclusions.csv", exclusions.str());
}

namespace {

struct LoadedChains {
  std::vector<SpinChain> chains;
  std::vector<EnergyTrace> traces;
  std::vector<std::string> failures;  // empty when the chain is usable
  std::int64_t interval = 1;
};

LoadedChains load_chains(const fs::path& dir, const ordered_json& section, ChainKind kind, const ModelFile& file,
                         const SquareLattice& lattice, int n_hidden) {
  LoadedChains out;
  out.interval = section.at("interval").get<std::int64_t>();
  const bool hidden = section.value("record_hidden", false);
  for (const auto& name : section.at("files")) {
    std::ifstream in(dir / name.get<std::string>());
    if (!in) throw std::invalid_argument("missing chain file " + name.get<std::string>());
    SpinChain chain = read_chain_csv(in, lattice.size(), kind, out.interval, hidden ? n_hidden : 0);
    chain.total_sweeps = section.at("sweeps").get<std::int64_t>();
    std::string failure;
    EnergyTrace trace;
    try {
      if (kind == ChainKind::Sim) chain = sim_filtered(chain);
      trace = energy_trace(chain, lattice, file.model, file.J);
    } catch (const ExclusionError& e) {
      failure = e.what();
    }
    out.chains.push_back(std::move(chain));
    out.traces.push_back(std::move(trace));
    out.failures.push_back(failure);
  }
  return out;
}

/// Tau over all chains plus the traces of chains that survived exclusion.
std::pair<MultiChainTau, std::vector<EnergyTrace>> chain_taus(const LoadedChains& loaded) {
  std::vector<std::vector<double>> series;
  std::vector<double> spacing;
  std::vector<std::size_t> origin;
  std::vector<ChainExclusion> pre;
  for (std::size_t k = 0; k < loaded.traces.size(); ++k) {
    if (!loaded.failures[k].empty()) {
      pre.push_back({k, loaded.failures[k]});
      continue;
    }
    series.push_back(loaded.traces[k].energy);
    spacing.push_back(loaded.traces[k].spacing);
    origin.push_back(k);
  }
  MultiChainTau tau;
  try {
    tau = multi_chain_tau(series, spacing);
  } catch (const ExclusionError& e) {
    std::string detail = e.what();
    for (const ChainExclusion& x : pre) detail += "; chain " + std::to_string(x.chain) + ": " + x.reason;
    throw ExclusionError(detail);
  }
  MultiChainTau mapped;
  mapped.mean_sweeps = tau.mean_sweeps;
  mapped.spread = tau.spread;
  mapped.per_chain_sweeps.assign(loaded.traces.size(), std::nan(""));
  for (std::size_t j = 0; j < origin.size(); ++j) mapped.per_chain_sweeps[origin[j]] = tau.per_chain_sweeps[j];
  mapped.excluded = pre;
  for (const ChainExclusion& x : tau.excluded) mapped.excluded.push_back({origin[x.chain], x.reason});
  std::vector<EnergyTrace> used;
  for (std::size_t j = 0; j < origin.size(); ++j) {
    if (std::isfinite(tau.per_chain_sweeps[j])) used.push_back(loaded.traces[origin[j]]);
  }
  return {mapped, used};
}

std::vector<std::int64_t> curve_grid(const std::vector<EnergyTrace>& traces, std::int64_t interval, int per_decade) {
  std::int64_t n_max = traces.front().total_sweeps;
  std::int64_t n_min = std::numeric_limits<std::int64_t>::max();
  for (const EnergyTrace& t : traces) {
    n_max = std::min(n_max, t.total_sweeps);
    if (!t.sweep.empty()) n_min = std::min(n_min, t.sweep.front());
  }
  return log_grid(std::max(n_min, interval), n_max, per_decade);
}

ordered_json tau_json(const MultiChainTau& tau) {
  ordered_json per_chain = ordered_json::array();
  for (double v : tau.per_chain_sweeps) per_chain.push_back(nullable(v));
  return {{"mean_sweeps", tau.mean_sweeps}, {"spread", tau.spread}, {"per_chain", per_chain},
          {"excluded_chains", exclusions_json(tau.excluded)}};
}

ordered_json fit_json(const InverseSqrtFit& fit) {
  return {{"a", fit.a},
          {"free_slope", fit.free_slope},
          {"free_intercept", fit.free_intercept},
          {"rms_log_residual", fit.rms_log_residual},
          {"n_points", fit.n_points},
          {"first_n", fit.first_n},
          {"last_n", fit.last_n},
          {"poor_fit", fit.poor_fit}};
}

}  // namespace

void cmd_analyze(const Manifest& m) {
  const ModelFile file = load_model(single_model(m));
  const SquareLattice lattice = SquareLattice::build(file.L);
  const fs::path chains_dir = m.chains_dir.empty() ? fs::path(m.out) : fs::path(m.chains_dir);
  const ordered_json index = read_json(chains_dir / "chains.json");
  if (index.at("model_hash").get<std::string>() != file_hash(single_model(m))) {
    throw std::invalid_argument("chains in " + chains_dir.string() + " were sampled from a different model");
  }
  if (!index.contains("mh")) throw std::invalid_argument("analysis needs MH chains");
  if (m.fit_window_mult < 0) throw std::invalid_argument("fit window multiplier must be non-negative");

  Manifest hashed = m;
  hashed.chains_dir = chains_dir.string();
  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("analyze", hashed), m.seed};
  const int n_hidden = file.model.n_hidden();

  const LoadedChains mh = load_chains(chains_dir, index.at("mh"), ChainKind::Mh, file, lattice, n_hidden);
  const auto [tau_mh, mh_used] = chain_taus(mh);

  BaselineConfig bcfg;
  bcfg.chains = m.baseline_chains;
  bcfg.sweeps = m.baseline_sweeps;
  bcfg.thermalization = m.thermalization;
  bcfg.seed = derive_seed(m.seed, kBaseline);
  bcfg.proposal = parse_pair_proposal(m.proposal);
  bcfg.threads = m.threads;
  const BaselineResult baseline = baseline_energy(lattice, file.model, file.J, bcfg);

  const std::vector<std::int64_t> mh_grid = curve_grid(mh_used, mh.interval, m.grid_per_decade);
  const ErrorCurve mh_curve = relative_error_curve(mh_used, baseline.energy, mh_grid);
  FitWindow window;
  window.floor = baseline.std_error / std::abs(baseline.energy);
  window.multiplier = m.fit_window_mult;
  const InverseSqrtFit fit = fit_inverse_sqrt(mh_curve, window);
  {
    std::ofstream f(out / "curve_mh.csv", std::ios::binary);
    write_curve_csv(f, mh_curve, prov.comment());
  }

  ordered_json report;
  prov.stamp(report);
  report["n_spins"] = lattice.size();
  report["alpha"] = file.model.alpha;
  report["tau_mh_sweeps"] = tau_mh.mean_sweeps;
  report["mh"] = tau_json(tau_mh);

  ordered_json analysis;
  prov.stamp(analysis);
  analysis["n_spins"] = lattice.size();
  analysis["alpha"] = file.model.alpha;
  analysis["baseline"] = {{"energy", baseline.energy},
                          {"stderr", baseline.std_error},
                          {"used_chains", baseline.used_chains},
                          {"excluded_chains", exclusions_json(baseline.excluded)}};
  analysis["fit_window_mult"] = m.fit_window_mult;
  analysis["mh_fit"] = fit_json(fit);
  analysis["tau_mh_sweeps"] = tau_mh.mean_sweeps;

  if (index.contains("sim")) {
    const LoadedChains sim = load_chains(chains_dir, index.at("sim"), ChainKind::Sim, file, lattice, n_hidden);
    const auto [tau_sim, sim_used] = chain_taus(sim);
    const std::vector<std::int64_t> sim_grid = curve_grid(sim_used, sim.interval, m.grid_per_decade);
    const ErrorCurve sim_curve = relative_error_curve(sim_used, baseline.energy, sim_grid);
    const ErrorCurve predicted = predicted_sim_curve(fit.a, tau_sim.mean_sweeps, tau_mh.mean_sweeps, sim_grid);
    {
      std::ofstream f(out / "curve_sim.csv", std::ios::binary);
      write_curve_csv(f, sim_curve, prov.comment());
      std::ofstream g(out / "curve_sim_predicted.csv", std::ios::binary);
      write_curve_csv(g, predicted, prov.comment());
    }
    const double ratio = iso_accuracy_ratio(tau_sim.mean_sweeps, tau_mh.mean_sweeps);
    report["tau_sim_sweeps"] = tau_sim.mean_sweeps;
    report["sim"] = tau_json(tau_sim);
    analysis["tau_sim_sweeps"] = tau_sim.mean_sweeps;
    analysis["ratio"] = ratio;

    ordered_json advantage;
    prov.stamp(advantage);
    advantage["n_spins"] = lattice.size();
    advantage["alpha"] = file.model.alpha;
    advantage["tau_sim"] = tau_sim.mean_sweeps;
    advantage["tau_mh"] = tau_mh.mean_sweeps;
    advantage["ratio"] = ratio;
    ordered_json projections = ordered_json::object();
    for (const HardwareProfile& p : builtin_profiles()) projections[p.name] = ratio * p.t_sweep;
    advantage["projected_seconds"] = projections;
    write_json(out / "advantage.json", advantage);
  }
  write_json(out / "tau_report.json", report);
  write_json(out / "analysis.json", analysis);
}

void cmd_project(const Manifest& m) {
  std::vector<ProjectionColumn> columns;
  std::vector<int> alphas;
  for (const std::string& path : m.reports) {
    const ordered_json doc = read_json(path);
    columns.push_back({doc.at("n_spins").get<int>(), doc.at("ratio").get<double>(), std::nullopt});
    alphas.push_back(doc.at("alpha").get<int>());
  }
  for (const std::string& point : m.points) {
    const auto colon = point.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--point must look like n_spins:ratio");
    try {
      columns.push_back({std::stoi(point.substr(0, colon)), std::stod(point.substr(colon + 1)), std::nullopt});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad --point '" + point + "'");
    }
    alphas.push_back(m.alpha);
  }
  if (columns.empty()) throw std::invalid_argument("project needs --report or --point inputs");
  std::vector<HardwareProfile> profiles = builtin_profiles();
  for (const std::string& text : m.profiles) profiles.push_back(parse_profile(text));

  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("project", m), m.seed};
  if (m.measure_cpu) {
    ordered_json cpu = ordered_json::array();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const int L = static_cast<int>(std::lround(std::sqrt(columns[c].n_spins)));
      if (L * L != columns[c].n_spins) throw std::invalid_argument("CPU measurement needs square lattice sizes");
      Rng rng = make_stream(derive_seed(m.seed, kCpuBench), c);
      const RbmModel model = RbmModel::random(columns[c].n_spins, alphas[c], 0.1, rng);
      columns[c].cpu = measure_cpu_sweep_times(model, L, derive_seed(m.seed, kCpuBench) + c);
      cpu.push_back({{"n_spins", columns[c].n_spins},
                     {"alpha", alphas[c]},
                     {"mh_seconds_per_sweep", columns[c].cpu->mh_seconds},
                     {"sim_seconds_per_sweep", columns[c].cpu->sim_seconds}});
    }
    ordered_json doc;
    prov.stamp(doc);
    doc["measurements"] = cpu;
    write_json(out / "cpu_times.json", doc);
  }
  const ProjectionTable table = build_projection_table(columns, profiles);
  std::ostringstream md;
  md << "<!-- " << prov.comment() << " -->\n";
  write_projection_markdown(md, table);
  write_text(out / "projection.md", md.str());
  std::ostringstream csv;
  csv << "# " << prov.comment() << '\n';
  write_projection_csv(csv, table);
  write_text(out / "projection.csv", csv.str());
  std::cout << md.str();
}

void cmd_barrier(const Manifest& m) {
  if (m.models.empty()) throw std::invalid_argument("--model is required");
  if (m.samples < 16) throw std::invalid_argument("barrier analysis needs at least 16 sweeps");
  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("barrier", m), m.seed};
  std::vector<BarrierReport> reports(m.models.size());
  std::vector<ModelFile> files;
  for (const std::string& path : m.models) files.push_back(load_model(path));
  parallel_for(files.size(), m.threads, [&](std::size_t k) {
    const ModelFile& file = files[k];
    const SquareLattice lattice = SquareLattice::build(file.L);
    ChainConfig cfg;
    cfg.sample_interval = 1;
    cfg.n_sweeps = m.samples;
    cfg.thermalization_sweeps = m.thermalization;
    cfg.seed = derive_seed(m.seed, kBarrier);
    cfg.stream = k;
    cfg.record_hidden = true;
    const SpinChain joint = run_sim_chain(IsingModel::from_rbm(file.model), cfg);
    const SpinChain kept = sim_filtered(joint);
    const EnergyTrace trace = energy_trace(kept, lattice, file.model, file.J);
    const double tau = integrated_autocorr_time(trace.energy, trace.spacing).tau_sweeps;
    reports[k] = barrier_report(file.model, joint, fs::path(m.models[k]).stem().string(), tau);
  });
  std::ostringstream csv;
  csv << "# " << prov.comment() << '\n';
  write_barrier_csv_header(csv);
  for (const BarrierReport& r : reports) write_barrier_csv_row(csv, r);
  write_text(out / "barrier.csv", csv.str());
  std::cout << csv.str();
}

void cmd_oracle(const Manifest& m) {
  const fs::path out = prepare_out(m);
  const Provenance prov{manifest_hash("oracle", m), m.seed};
  ordered_json doc;
  prov.stamp(doc);
  doc["J"] = m.J;
  oracle::ExactSpectrumResult exact;
  if (m.ring > 0) {
    const std::vector<Bond> bonds = oracle::ring_bonds(m.ring);
    exact = oracle::exact_ground_energy(m.ring, bonds, m.J);
    doc["geometry"] = "ring";
    doc["n_spins"] = m.ring;
  } else {
    const SquareLattice lattice = SquareLattice::build(m.L);
    exact = oracle::exact_ground_energy(lattice, m.J);
    doc["geometry"] = "square";
    doc["L"] = m.L;
    doc["n_spins"] = lattice.size();
  }
  doc["ground_energy"] = exact.ground_energy;
  doc["energy_per_site"] = exact.ground_energy / doc["n_spins"].get<int>();
  doc["sector_dimension"] = exact.sector_dimension;
  ordered_json variational = ordered_json::array();
  for (const std::string& path : m.models) {
    const ModelFile file = load_model(path);
    const SquareLattice lattice = SquareLattice::build(file.L);
    const double e = oracle::exact_variational_energy(file.model, lattice, file.J);
    ordered_json entry{{"model", fs::path(path).filename().string()},
                       {"variational_energy", e}};
    if (file.L == m.L && file.J == m.J && m.ring == 0) {
      entry["relative_error"] = std::abs((e - exact.ground_energy) / exact.ground_energy);
    }
    variational.push_back(entry);
  }
  if (!m.models.empty()) doc["models"] = variational;
  write_json(out / "oracle.json", doc);
  std::cout << doc.dump(2) << '\n';
}

}  // namespace isingnqs::cli
