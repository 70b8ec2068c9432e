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

#include "isingnqs/advantage.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isingnqs/format.hpp"
#include "isingnqs/ising.hpp"
#include "isingnqs/lattice.hpp"
#include "isingnqs/rng.hpp"
#include "isingnqs/samplers.hpp"

namespace isingnqs {

void HardwareProfile::validate() const {
  if (!(t_sweep > 0.0) || !std::isfinite(t_sweep)) {
    throw std::invalid_argument("profile '" + name + "' needs a positive sweep time");
  }
}

std::vector<HardwareProfile> builtin_profiles() {
  return {
      {"fpga", 14.3e-9, "FPGA emulation at 70 MHz"},
      {"conservative", 400e-9, "conservative analog in-memory sweep latency"},
      {"optimistic", 4e-9, "optimistic analog in-memory sweep latency"},
  };
}

HardwareProfile builtin_profile(std::string_view name) {
  for (const HardwareProfile& p : builtin_profiles()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown hardware profile '" + std::string(name) + "'");
}

HardwareProfile parse_profile(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("profile must look like name:seconds");
  }
  HardwareProfile p;
  p.name = std::string(text.substr(0, colon));
  const std::string value(text.substr(colon + 1));
  std::size_t used = 0;
  try {
    p.t_sweep = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad profile latency '" + value + "'");
  }
  if (used != value.size()) throw std::invalid_argument("bad profile latency '" + value + "'");
  p.note = "user supplied";
  p.validate();
  return p;
}

double iso_accuracy_ratio(double tau_sim, double tau_mh) {
  if (!(tau_sim > 0.0) || !(tau_mh > 0.0)) throw std::invalid_argument("autocorrelation times must be positive");
  return tau_sim / tau_mh;
}

RuntimeProjection project_runtime(double ratio, const HardwareProfile& profile,
                                  const HardwareProfile& mh_profile) {
  if (!(ratio > 0.0)) throw std::invalid_argument("ratio must be positive");
  profile.validate();
  mh_profile.validate();
  RuntimeProjection out;
  out.seconds = ratio * profile.t_sweep;
  out.speedup = mh_profile.t_sweep / out.seconds;
  return out;
}

double energy_comparison(double ratio, double sim_power_watts, double sim_t_sweep, double mh_power_watts,
                         double mh_t_sweep) {
  if (!(ratio > 0.0) || !(sim_power_watts > 0.0) || !(sim_t_sweep > 0.0) || !(mh_power_watts > 0.0) ||
      !(mh_t_sweep > 0.0)) {
    throw std::invalid_argument("energy comparison inputs must be positive");
  }
  return (mh_power_watts * mh_t_sweep) / (sim_power_watts * ratio * sim_t_sweep);
}

bool check_advantage(double n_sim, double t_sim, double n_mh, double t_mh) { return n_sim * t_sim < n_mh * t_mh; }

namespace {

template <typename Sweep>
std::pair<double, std::int64_t> time_sweeps(Sweep&& sweep, double min_seconds) {
  using clock = std::chrono::steady_clock;
  for (int k = 0; k < 20; ++k) sweep();
  std::int64_t done = 0;
  std::int64_t batch = 16;
  const auto start = clock::now();
  double elapsed = 0.0;
  while (elapsed < min_seconds) {
    for (std::int64_t k = 0; k < batch; ++k) sweep();
    done += batch;
    batch *= 2;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  }
  return {elapsed / static_cast<double>(done), done};
}

}  // namespace

CpuSweepTimes measure_cpu_sweep_times(const RbmModel& model, int L, std::uint64_t seed, double min_seconds) {
  const SquareLattice lattice = SquareLattice::build(L);
  if (lattice.size() != model.n_visible) throw std::invalid_argument("model does not match the lattice");
  CpuSweepTimes out;
  out.n_spins = model.n_visible;
  out.alpha = model.alpha;

  Rng mh_rng = make_stream(seed, 0);
  MhState mh(model, neel_state(lattice));
  const auto [mh_t, mh_n] = time_sweeps(
      [&] { mh_sweep(model, mh, mh_rng, PairProposal::Global, lattice.neighbors()); }, min_seconds);
  out.mh_seconds = mh_t;
  out.mh_sweeps = mh_n;

  const IsingModel ising = IsingModel::from_rbm(model);
  Rng sim_rng = make_stream(seed, 1);
  SimState sim = SimState::random(ising, sim_rng);
  const auto [sim_t, sim_n] = time_sweeps([&] { sim_sweep(ising, sim, sim_rng); }, min_seconds);
  out.sim_seconds = sim_t;
  out.sim_sweeps = sim_n;
  return out;
}

ProjectionTable build_projection_table(std::span<const ProjectionColumn> columns,
                                       std::span<const HardwareProfile> profiles) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ProjectionTable table;
  bool any_cpu = false;
  for (const ProjectionColumn& c : columns) {
    if (!(c.ratio > 0.0)) throw std::invalid_argument("projection ratio must be positive");
    table.n_spins.push_back(c.n_spins);
    any_cpu = any_cpu || c.cpu.has_value();
  }
  if (any_cpu) {
    std::vector<double> mh_row;
    std::vector<double> sim_row;
    for (const ProjectionColumn& c : columns) {
      mh_row.push_back(c.cpu ? c.cpu->mh_seconds : nan);
      sim_row.push_back(c.cpu ? c.ratio * c.cpu->sim_seconds : nan);
    }
    table.row_names = {"cpu_mh", "cpu_sim"};
    table.seconds = {mh_row, sim_row};
  }
  for (const HardwareProfile& p : profiles) {
    p.validate();
    std::vector<double> row;
    for (const ProjectionColumn& c : columns) row.push_back(c.ratio * p.t_sweep);
    table.row_names.push_back(p.name);
    table.seconds.push_back(std::move(row));
  }
  return table;
}

void write_projection_markdown(std::ostream& out, const ProjectionTable& table) {
  out << "| profile |";
  for (int n : table.n_spins) out << " n=" << n << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < table.n_spins.size(); ++c) out << "---|";
  out << '\n';
  for (std::size_t r = 0; r < table.row_names.size(); ++r) {
    out << "| " << table.row_names[r] << " |";
    for (double v : table.seconds[r]) out << ' ' << format_double(v) << " |";
    out << '\n';
  }
}

void write_projection_csv(std::ostream& out, const ProjectionTable& table) {
  out << "profile";
  for (int n : table.n_spins) out << ',' << n;
  out << '\n';
  for (std::size_t r = 0; r < table.row_names.size(); ++r) {
    out << table.row_names[r];
    for (double v : table.seconds[r]) out << ',' << format_double(v);
    out << '\n';
  }
}

AdvantageReport advantage_report(double tau_sim, double tau_mh, const HardwareProfile& mh_profile,
                                 std::span<const HardwareProfile> profiles) {
  AdvantageReport report;
  report.tau_sim = tau_sim;
  report.tau_mh = tau_mh;
  report.ratio = iso_accuracy_ratio(tau_sim, tau_mh);
  for (const HardwareProfile& p : profiles) {
    report.projections.emplace_back(p.name, project_runtime(report.ratio, p, mh_profile));
  }
  return report;
}

}  // namespace isingnqs
