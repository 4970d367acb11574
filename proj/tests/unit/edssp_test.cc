// Copyright 2026 The satsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "fixtures.h"
#include "satsched/edssp.h"
#include "satsched/generate.h"
#include "test_support.h"

namespace satsched::edssp {
namespace {

using testing::EmptyEdssp;
using testing::MakeEdsspTask;
using testing::MakeSatellite;
using testing::MakeWindow;

constexpr double kPi = std::numbers::pi;
constexpr std::array<double, 4> kLevels = {8.0, 4.0, 2.0, 1.0};

TEST(Bessel, ZeroArgument) {
  EXPECT_EQ(BesselJ(1, 0.0), 0.0);
  EXPECT_EQ(BesselJ(3, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(BesselJOverPower(1, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(BesselJOverPower(3, 0.0), 1.0 / 48.0);
}

TEST(Bessel, FirstMaximumOfJ1) {
  EXPECT_NEAR(BesselJ(1, 1.8412), 0.5819, 1e-4);
}

TEST(Bessel, MatchesHighPrecisionSeries) {
  for (int order : {1, 3}) {
    for (double u = 0.05; u <= 20.0; u += 0.37) {
      EXPECT_NEAR(BesselJ(order, u),
                  testing::BesselSeriesReference(order, u, 80), 1e-12)
          << "order " << order << " u " << u;
    }
  }
}

TEST(Bessel, LargeArgument) {
  for (int order : {1, 3}) {
    for (double u : {20.5, 25.0, 50.0, 100.0, 333.3}) {
      EXPECT_NEAR(BesselJ(order, u), boost::math::cyl_bessel_j(order, u),
                  1e-12)
          << "order " << order << " u " << u;
    }
  }
}

TEST(Bessel, RejectsBadInput) {
  EXPECT_THROW(BesselJ(2, 1.0), InputError);
  EXPECT_THROW(BesselJ(1, -1.0), InputError);
}

TEST(Gain, Peak) {
  Satellite sat = MakeSatellite("s");
  EdsspTask task = MakeEdsspTask("t", 0, 10, 1);
  task.wavelength_m = 1.0;
  EXPECT_NEAR(PeakGain(sat, task), kPi * kPi, 1e-12);
  sat.antenna_efficiency = 0.5;
  sat.antenna_diameter_m = 2.0;
  EXPECT_NEAR(PeakGain(sat, task), 2 * kPi * kPi, 1e-12);
  const double before = PeakGain(sat, task);
  sat.antenna_diameter_m = 4.0;
  EXPECT_NEAR(PeakGain(sat, task), 4 * before, 1e-12);
}

TEST(Gain, Beamwidth) {
  Satellite sat = MakeSatellite("s");
  EdsspTask task = MakeEdsspTask("t", 0, 10, 1);
  sat.antenna_diameter_m = 7.0;
  task.wavelength_m = 0.1;
  EXPECT_NEAR(Theta3db(task, sat), 0.017453, 1e-6);
  sat.antenna_diameter_m = 70.0;
  task.wavelength_m = 1.0;
  EXPECT_NEAR(Theta3db(task, sat), kPi / 180, 1e-12);
  sat.antenna_diameter_m = 7.0;
  task.wavelength_m = 0.2;
  EXPECT_NEAR(Theta3db(task, sat), 0.034907, 1e-6);
}

TEST(Gain, Signal) {
  const double t3 = 0.02;
  EXPECT_NEAR(SignalGain(0.0, t3, 7.0), 7.0, 7e-6);
  EXPECT_NEAR(SignalGain(t3, t3, 7.0) / 7.0, 0.5, 0.01);
  EXPECT_GT(SignalGain(0.5 * t3, t3, 7.0), SignalGain(t3, t3, 7.0));
  double prev = SignalGain(0.0, t3, 1.0);
  for (int i = 1; i <= 100; ++i) {
    const double g = SignalGain(t3 * i / 100.0, t3, 1.0);
    EXPECT_LT(g, prev) << i;
    prev = g;
  }
}

TEST(Bandwidth, Levels) {
  EXPECT_EQ(BandwidthForDegree(80, kLevels), 8.0);
  EXPECT_EQ(BandwidthForDegree(75, kLevels), 4.0);
  EXPECT_EQ(BandwidthForDegree(25, kLevels), 1.0);
  EXPECT_THROW(BandwidthForDegree(0, kLevels), InputError);
  EXPECT_THROW(BandwidthForDegree(101, kLevels), InputError);
  for (int d = 1; d <= 100; ++d) {
    const int expected = d > 75 ? 1 : d > 50 ? 2 : d > 25 ? 3 : 4;
    EXPECT_EQ(BandwidthLevel(d), expected) << d;
  }
}

TEST(Bandwidth, Gain) {
  EXPECT_EQ(BandwidthGain(8.0, kLevels), 1.0);
  EXPECT_EQ(BandwidthGain(4.0, kLevels), 0.5);
  EXPECT_GT(BandwidthGain(8.0, kLevels), BandwidthGain(1.0, kLevels));
  EXPECT_THROW(BandwidthGain(3.0, kLevels), InputError);
}

TEST(DataVolume, Product) {
  Satellite sat = MakeSatellite("s");
  sat.unit_data_rate = 0.5;
  EdsspTask task = MakeEdsspTask("t", 0, 100, 10, 80);
  EXPECT_DOUBLE_EQ(DataVolume(sat, task, kLevels), 40.0);
  task.duration_s = 20;
  EXPECT_DOUBLE_EQ(DataVolume(sat, task, kLevels), 80.0);
  sat.unit_data_rate = 0.0;
  EXPECT_DOUBLE_EQ(DataVolume(sat, task, kLevels), 0.0);
}

TEST(Transition, MaxOfTerms) {
  Satellite sat = MakeSatellite("s");
  EdsspTask a = MakeEdsspTask("a", 0, 100, 10);
  EdsspTask b = a;
  b.id = "b";
  sat.poweron_time_s = 2;
  EXPECT_EQ(TransitionTime(sat, a, b), 2);
  b.frequency = 1;
  sat.transition_tables.frequency.Set(0, 1, 5);
  EXPECT_EQ(TransitionTime(sat, a, b), 5);
  sat.poweron_time_s = 0;
  sat.transition_tables.frequency.Set(0, 1, 0);
  EXPECT_EQ(TransitionTime(sat, a, b), 0);
  b.mode = 3;
  try {
    TransitionTime(sat, a, b);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown parameter transition"),
              std::string::npos);
  }
}

TEST(Transition, BandwidthKeyedByLevel) {
  Satellite sat = MakeSatellite("s");
  EdsspTask a = MakeEdsspTask("a", 0, 100, 10, 90);
  EdsspTask b = MakeEdsspTask("b", 0, 100, 10, 10);
  sat.transition_tables.bandwidth.Set(1, 4, 9);
  EXPECT_EQ(TransitionTime(sat, a, b), 9);
}

TEST(MinAngle, OverInterval) {
  VisibleWindow w = MakeWindow("s", "t", 0, 10);
  w.angle_profile = {{0, 0.1}, {5, 0.0}, {10, 0.1}};
  EXPECT_DOUBLE_EQ(MinAngleOver(w, 0, 10), 0.0);
  EXPECT_NEAR(MinAngleOver(w, 6, 8), 0.02, 1e-15);
  EXPECT_NEAR(MinAngleOver(w, 0, 2), 0.06, 1e-15);
}

// Two tasks on one orbit of one satellite.
Scenario TwoTasks() {
  Scenario s = EmptyEdssp();
  s.satellites = {MakeSatellite("s1")};
  s.satellites[0].poweron_time_s = 5;
  s.edssp_tasks = {MakeEdsspTask("a", 0, 500, 20),
                   MakeEdsspTask("b", 0, 500, 20)};
  s.windows = {MakeWindow("s1", "a", 10, 200), MakeWindow("s1", "b", 10, 200)};
  return s;
}

TEST(Check, EmptySchedule) {
  EXPECT_TRUE(CheckSchedule(TwoTasks(), Schedule{}).empty());
}

TEST(Check, SingleFeasible) {
  Scenario s = TwoTasks();
  Schedule sched{{{"s1", "a", 0, 0, 10}}};
  EXPECT_TRUE(CheckSchedule(s, sched).empty());
}

TEST(Check, TransitionGap) {
  Scenario s = TwoTasks();
  Schedule sched{{{"s1", "a", 0, 0, 10}, {"s1", "b", 0, 0, 33}}};
  auto v = CheckSchedule(s, sched);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].constraint_id, ConstraintId::kC7Transition);
  EXPECT_NE(std::find(v[0].entities.begin(), v[0].entities.end(), "task a"),
            v[0].entities.end());
  EXPECT_NE(std::find(v[0].entities.begin(), v[0].entities.end(), "task b"),
            v[0].entities.end());
  sched.assignments[1].start_s = 35;
  EXPECT_TRUE(CheckSchedule(s, sched).empty());
}

TEST(Check, EachConstraint) {
  Scenario s = TwoTasks();
  s.edssp_tasks[0].est_s = 20;
  s.edssp_tasks[0].let_s = 150;
  auto expect = [&](const Scenario& sc, const Schedule& sched,
                    ConstraintId id) {
    EXPECT_TRUE(HasViolation(CheckSchedule(sc, sched), id))
        << ConstraintIdName(id);
  };
  expect(s, Schedule{{{"s1", "a", 0, 0, 15}}}, ConstraintId::kC1Est);
  expect(s, Schedule{{{"s1", "a", 0, 0, 140}}}, ConstraintId::kC2Let);
  expect(s, Schedule{{{"s1", "b", 0, 0, 5}}}, ConstraintId::kC4Evt);
  expect(s, Schedule{{{"s1", "b", 0, 0, 190}}}, ConstraintId::kC5Lvt);
  expect(s, Schedule{{{"s1", "b", 0, 0, 50}, {"s1", "b", 0, 0, 100}}},
         ConstraintId::kC8Once);
  expect(s, Schedule{{{"s1", "b", 0, 3, 50}}}, ConstraintId::kC9Domain);
  expect(s, Schedule{{{"s9", "b", 0, 0, 50}}}, ConstraintId::kC9Domain);

  Scenario angled = s;
  angled.windows[1].angle_profile = {{10, 0.0}, {100, 0.0}, {110, 0.9},
                                     {200, 0.0}};
  expect(angled, Schedule{{{"s1", "b", 0, 0, 95}}}, ConstraintId::kC3Angle);
  EXPECT_TRUE(CheckSchedule(angled, Schedule{{{"s1", "b", 0, 0, 20}}}).empty());

  Scenario small = s;
  small.satellites[0].storage_capacity = 100;
  expect(small, Schedule{{{"s1", "b", 0, 0, 50}}}, ConstraintId::kC6Storage);
}

TEST(Check, UnknownReferenceDoesNotStopChecking) {
  Scenario s = TwoTasks();
  Schedule sched{{{"s1", "zz", 0, 0, 50}, {"s1", "a", 0, 0, 195}}};
  auto v = CheckSchedule(s, sched);
  EXPECT_TRUE(HasViolation(v, ConstraintId::kC9Domain));
  EXPECT_TRUE(HasViolation(v, ConstraintId::kC5Lvt));
}

TEST(Objective, Values) {
  Scenario s = TwoTasks();
  EXPECT_EQ(ObjectiveValue(s, Schedule{}), 0.0);
  const Satellite& sat = s.satellites[0];
  const EdsspTask& a = s.edssp_tasks[0];
  const double g = PeakGain(sat, a);
  Schedule one{{{"s1", "a", 0, 0, 10}}};
  EXPECT_NEAR(ObjectiveValue(s, one), g * 1.0, 1e-9 * g);

  s.edssp_tasks[1].degree = 60;
  Schedule other{{{"s1", "b", 0, 0, 40}}};
  Schedule both{{one.assignments[0], other.assignments[0]}};
  EXPECT_DOUBLE_EQ(ObjectiveValue(s, both),
                   ObjectiveValue(s, one) + ObjectiveValue(s, other));
  Schedule reversed{{other.assignments[0], one.assignments[0]}};
  EXPECT_EQ(ObjectiveValue(s, both), ObjectiveValue(s, reversed));
}

TEST(Objective, UsesMinimumAngle) {
  Scenario s = TwoTasks();
  s.windows[0].angle_profile = {{10, 0.01}, {30, 0.0}, {200, 0.01}};
  const double g = PeakGain(s.satellites[0], s.edssp_tasks[0]);
  EXPECT_NEAR(ObjectiveValue(s, Schedule{{{"s1", "a", 0, 0, 20}}}), g,
              1e-9 * g);
  EXPECT_LT(ObjectiveValue(s, Schedule{{{"s1", "a", 0, 0, 100}}}), g);
}

TEST(Decoder, Basics) {
  Scenario s = TwoTasks();
  Decoder d(s);
  EXPECT_TRUE(d.Decode(std::vector<int>{}).assignments.empty());
  Schedule one = d.Decode(std::vector<int>{0});
  ASSERT_EQ(one.assignments.size(), 1u);
  EXPECT_EQ(one.assignments[0].start_s, 10);
  Schedule two = d.Decode(std::vector<int>{1, 0});
  ASSERT_EQ(two.assignments.size(), 2u);
  EXPECT_EQ(two.assignments[0].task_id, "b");
  EXPECT_EQ(two.assignments[1].start_s, 35);
  EXPECT_TRUE(CheckSchedule(s, two).empty());
  EXPECT_DOUBLE_EQ(d.Evaluate(std::vector<int>{1, 0}), ObjectiveValue(s, two));
}

TEST(Decoder, SharedWindowTooShort) {
  Scenario s = TwoTasks();
  s.windows[0].lvt_s = s.windows[1].lvt_s = 50;
  s.windows[0].angle_profile = s.windows[1].angle_profile = {{10, 0.0},
                                                             {50, 0.0}};
  Decoder d(s);
  Schedule sched = d.Decode(std::vector<int>{1, 0});
  ASSERT_EQ(sched.assignments.size(), 1u);
  EXPECT_EQ(sched.assignments[0].task_id, "b");
}

TEST(Decoder, PrefersEarliestStart) {
  Scenario s = TwoTasks();
  s.satellites.push_back(MakeSatellite("s2", 2));
  s.windows.push_back(MakeWindow("s2", "a", 0, 100, 1));
  Decoder d(s);
  Schedule sched = d.Decode(std::vector<int>{0});
  ASSERT_EQ(sched.assignments.size(), 1u);
  EXPECT_EQ(sched.assignments[0].satellite_id, "s2");
  EXPECT_EQ(sched.assignments[0].orbit_index, 1);
  EXPECT_EQ(sched.assignments[0].start_s, 0);
}

TEST(Decoder, RejectsWrongKind) {
  Scenario s = TwoTasks();
  s.kind = ProblemKind::kMsjopp;
  EXPECT_THROW(Decoder{s}, InputError);
}

TEST(Decoder, OutputAlwaysFeasible) {
  testing::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    GenerateParams p = testing::RandomParams(ProblemKind::kEdssp, rng);
    Scenario s = GenerateScenario(ProblemKind::kEdssp, p);
    Decoder d(s);
    auto perm = testing::RandomPermutation(d.task_count(), rng);
    Schedule sched = d.Decode(perm);
    ASSERT_TRUE(CheckSchedule(s, sched).empty()) << i;
    std::shuffle(sched.assignments.begin(), sched.assignments.end(), rng);
    EXPECT_EQ(ObjectiveValue(s, sched), d.Evaluate(perm));
  }
}

}  // namespace
}  // namespace satsched::edssp
