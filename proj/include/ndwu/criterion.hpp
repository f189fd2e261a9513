// Copyright 2026 The ndwu-lab Authors.
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

// Correlation criterion from the two-outcome uncertainty-disturbance
// relation. In every conditional state S of a party, the relation confines
// the state-independent overlap parameter c to
//
//   [e0 e1 - sqrt(1-e0^2) sqrt(1-e1^2),  e0 e1 + sqrt(1-e0^2) sqrt(1-e1^2)]
//
// with e_k the conditional expectation of that party's observable k. A
// common c exists iff the largest lower end does not exceed the smallest
// upper end. The check runs for Alice's states (prepared by Bob) and for
// Bob's states (prepared by Alice).

#pragma once

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "ndwu/behavior.hpp"
#include "ndwu/measures.hpp"

namespace ndwu {

struct StateInterval {
  ConditionalState state;
  double e0 = 0.0;
  double e1 = 0.0;
  CInterval interval;
};

struct SideReport {
  double max_lhs = -1.0;
  double min_rhs = 1.0;
  bool satisfied = true;
  int skipped_states = 0;
  std::vector<StateInterval> states;
};

struct CriterionReport {
  SideReport side_a;  // Alice's observables on the states Bob prepares
  SideReport side_b;  // Bob's observables on the states Alice prepares
  bool overall = true;
};

inline SideReport criterion_side(const Behavior& behavior, Party holder) {
  SideReport report;
  const auto states = conditional_state_set(behavior, holder);
  report.skipped_states = 4 - static_cast<int>(states.size());
  for (const auto& state : states) {
    const double e0 = conditional_expectation(behavior, holder, 0, state.setting, state.outcome);
    const double e1 = conditional_expectation(behavior, holder, 1, state.setting, state.outcome);
    report.states.push_back({state, e0, e1, c_interval(e0, e1)});
  }
  if (!report.states.empty()) {
    report.max_lhs = report.states.front().interval.lo;
    report.min_rhs = report.states.front().interval.hi;
    for (const auto& s : report.states) {
      report.max_lhs = std::max(report.max_lhs, s.interval.lo);
      report.min_rhs = std::min(report.min_rhs, s.interval.hi);
    }
  }
  // fewer than two surviving states constrain nothing
  report.satisfied =
      report.states.size() < 2 || report.max_lhs <= report.min_rhs + behavior.tol();
  return report;
}

inline CriterionReport criterion(const Behavior& behavior) {
  CriterionReport report;
  report.side_a = criterion_side(behavior, Party::Alice);
  report.side_b = criterion_side(behavior, Party::Bob);
  report.overall = report.side_a.satisfied && report.side_b.satisfied;
  return report;
}

inline nlohmann::json to_json_value(const SideReport& side) {
  return {{"max_lhs", side.max_lhs},
          {"min_rhs", side.min_rhs},
          {"satisfied", side.satisfied},
          {"skipped_states", side.skipped_states}};
}

inline nlohmann::json to_json_value(const CriterionReport& report) {
  return {{"side_a", to_json_value(report.side_a)},
          {"side_b", to_json_value(report.side_b)},
          {"overall", report.overall}};
}

}  // namespace ndwu
