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

#ifndef ISINGNQS_ADVANTAGE_HPP
#define ISINGNQS_ADVANTAGE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isingnqs/rbm.hpp"

namespace isingnqs {

struct HardwareProfile {
  std::string name;
  double t_sweep = 0.0;  // seconds per sweep
  std::string note;

  /// Throws std::invalid_argument for a nonpositive or non-finite latency.
  void validate() const;
};

/// fpga (14.3 ns), conservative (400 ns) and optimistic (4 ns) sIM latencies.
std::vector<HardwareProfile> builtin_profiles();
/// Looks up a built-in profile by name; throws std::invalid_argument.
HardwareProfile builtin_profile(std::string_view name);
/// Parses "name:seconds", e.g. "asic:2e-9".
HardwareProfile parse_profile(std::string_view text);

/// tau_sim / tau_mh. Throws std::invalid_argument for nonpositive taus.
double iso_accuracy_ratio(double tau_sim, double tau_mh);

struct RuntimeProjection {
  double seconds = 0.0;
  double speedup = 0.0;
};

/// Time for one sIM chain to match one MH sweep's independent information.
RuntimeProjection project_runtime(double ratio, const HardwareProfile& profile,
                                  const HardwareProfile& mh_profile);

double energy_comparison(double ratio, double sim_power_watts, double sim_t_sweep, double mh_power_watts,
                         double mh_t_sweep);

/// Strict N_sim t_sim < N_mh t_mh.
bool check_advantage(double n_sim, double t_sim, double n_mh, double t_mh);

struct CpuSweepTimes {
  int n_spins = 0;
  int alpha = 0;
  double mh_seconds = 0.0;
  double sim_seconds = 0.0;
  std::int64_t mh_sweeps = 0;
  std::int64_t sim_sweeps = 0;
};

/// Wall-clock seconds per sweep of both samplers on the given model, each
/// timed for at least min_seconds after a short warm-up.
CpuSweepTimes measure_cpu_sweep_times(const RbmModel& model, int L, std::uint64_t seed, double min_seconds = 0.2);

struct ProjectionColumn {
  int n_spins = 0;
  double ratio = 0.0;
  std::optional<CpuSweepTimes> cpu;
};

struct ProjectionTable {
  std::vector<int> n_spins;
  std::vector<std::string> row_names;
  std::vector<std::vector<double>> seconds;  // [row][column]; NaN where unavailable
};

/// Rows: cpu_mh (one MH sweep), cpu_sim (ratio CPU sIM sweeps) when measured,
/// then ratio x t_sweep for each profile.
ProjectionTable build_projection_table(std::span<const ProjectionColumn> columns,
                                       std::span<const HardwareProfile> profiles);

void write_projection_markdown(std::ostream& out, const ProjectionTable& table);
void write_projection_csv(std::ostream& out, const ProjectionTable& table);

struct AdvantageReport {
  double tau_sim = 0.0;
  double tau_mh = 0.0;
  double ratio = 0.0;
  std::vector<std::pair<std::string, RuntimeProjection>> projections;
  std::optional<double> energy_factor;
};

AdvantageReport advantage_report(double tau_sim, double tau_mh, const HardwareProfile& mh_profile,
                                 std::span<const HardwareProfile> profiles);

}  // namespace isingnqs

#endif  // ISINGNQS_ADVANTAGE_HPP
