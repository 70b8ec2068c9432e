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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "isingnqs/advantage.hpp"
#include "test_support.hpp"

namespace isingnqs {
namespace {

TEST(IsoAccuracy, RatioOfTaus) {
  EXPECT_DOUBLE_EQ(iso_accuracy_ratio(10, 5), 2.0);
  EXPECT_DOUBLE_EQ(iso_accuracy_ratio(3, 3), 1.0);
  EXPECT_THROW(iso_accuracy_ratio(0, 1), std::invalid_argument);
  EXPECT_THROW(iso_accuracy_ratio(1, -1), std::invalid_argument);
}

TEST(ProjectRuntime, BuiltInProfiles) {
  const HardwareProfile cpu{"cpu", 1e-5, ""};
  EXPECT_NEAR(project_runtime(10, builtin_profile("fpga"), cpu).seconds, 143e-9, 1e-20);
  EXPECT_NEAR(project_runtime(10, builtin_profile("conservative"), cpu).seconds, 4e-6, 1e-18);
  EXPECT_NEAR(project_runtime(10, builtin_profile("optimistic"), cpu).seconds, 40e-9, 1e-20);
  EXPECT_NEAR(project_runtime(10, builtin_profile("conservative"), cpu).speedup, 2.5, 1e-12);
  EXPECT_THROW(builtin_profile("gpu"), std::invalid_argument);
}

TEST(ProjectRuntime, LinearInRatioAndLatency) {
  const HardwareProfile mh{"mh", 2e-6, ""};
  const HardwareProfile p{"p", 3e-8, ""};
  const HardwareProfile p2{"p2", 6e-8, ""};
  const double base = project_runtime(4, p, mh).seconds;
  EXPECT_NEAR(project_runtime(8, p, mh).seconds, 2 * base, 1e-22);
  EXPECT_NEAR(project_runtime(4, p2, mh).seconds, 2 * base, 1e-22);
}

TEST(ProjectRuntime, OrderingForAnyRatioAboveOne) {
  const HardwareProfile mh{"mh", 1e-5, ""};
  for (double ratio : {1.0, 1.5, 10.0, 1e4}) {
    const double opt = project_runtime(ratio, builtin_profile("optimistic"), mh).seconds;
    const double fpga = project_runtime(ratio, builtin_profile("fpga"), mh).seconds;
    const double cons = project_runtime(ratio, builtin_profile("conservative"), mh).seconds;
    EXPECT_LT(opt, fpga);
    EXPECT_LT(fpga, cons);
  }
}

TEST(EnergyComparison, LinearityAndUnity) {
  EXPECT_DOUBLE_EQ(energy_comparison(2.0, 1.0, 1.0, 2.0, 1.0), 1.0);
  const double base = energy_comparison(3.0, 0.4, 4e-7, 200.0, 2e-5);
  EXPECT_DOUBLE_EQ(energy_comparison(3.0, 0.8, 4e-7, 200.0, 2e-5), base / 2);
  EXPECT_NEAR(base, 200.0 * 2e-5 / (0.4 * 3.0 * 4e-7), 1e-9);
}

TEST(CheckAdvantage, StrictInequality) {
  EXPECT_TRUE(check_advantage(10, 1, 1, 100));
  EXPECT_FALSE(check_advantage(10, 10, 1, 100));
  EXPECT_FALSE(check_advantage(1, 100, 10, 1));
  const HardwareProfile mh{"mh", 1e-5, ""};
  const RuntimeProjection proj = project_runtime(10, builtin_profile("fpga"), mh);
  EXPECT_EQ(check_advantage(10, 14.3e-9, 1, mh.t_sweep), proj.speedup > 1);
}

TEST(Profiles, ParseUserProfile) {
  const HardwareProfile p = parse_profile("asic:2e-9");
  EXPECT_EQ(p.name, "asic");
  EXPECT_DOUBLE_EQ(p.t_sweep, 2e-9);
  EXPECT_THROW(parse_profile("asic"), std::invalid_argument);
  EXPECT_THROW(parse_profile("asic:-1"), std::invalid_argument);
  EXPECT_THROW(parse_profile("asic:fast"), std::invalid_argument);
}

TEST(ProjectionTable, RowsAndColumns) {
  std::vector<ProjectionColumn> cols{{16, 2.0, std::nullopt}, {36, 4.0, std::nullopt}};
  const auto profiles = builtin_profiles();
  const ProjectionTable table = build_projection_table(cols, profiles);
  ASSERT_EQ(table.row_names, (std::vector<std::string>{"fpga", "conservative", "optimistic"}));
  EXPECT_DOUBLE_EQ(table.seconds[1][1], 4.0 * 400e-9);
  std::ostringstream csv;
  write_projection_csv(csv, table);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "profile,16,36");
  cols[0].cpu = CpuSweepTimes{16, 2, 1e-5, 2e-6, 1, 1};
  const ProjectionTable with_cpu = build_projection_table(cols, profiles);
  EXPECT_EQ(with_cpu.row_names.front(), "cpu_mh");
  EXPECT_DOUBLE_EQ(with_cpu.seconds[1][0], 2.0 * 2e-6);
  EXPECT_TRUE(std::isnan(with_cpu.seconds[0][1]));
}

TEST(CpuBenchmark, ProducesPositiveTimes) {
  const RbmModel model = testing::random_model(16, 2, 0.1, 1);
  const CpuSweepTimes t = measure_cpu_sweep_times(model, 4, 1, 0.01);
  EXPECT_GT(t.mh_seconds, 0.0);
  EXPECT_GT(t.sim_seconds, 0.0);
  EXPECT_GT(t.mh_sweeps, 0);
}

}  // namespace
}  // namespace isingnqs
