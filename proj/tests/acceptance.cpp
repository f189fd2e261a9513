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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ndwu/ndwu.hpp"

using namespace ndwu;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260101;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome relation_fuzz() {
  const auto t0 = Clock::now();
  const auto s = campaigns::run_relation_fuzz(100000, {2, 3, 4, 5}, kSeed);
  const double elapsed = seconds_since(t0);
  const auto w = quantum::verify_theorem1(quantum::plus_state(), quantum::SharpBasis::computational(2),
                                          quantum::pauli_x().basis());
  const double gap = std::abs(w.lhs - w.rhs);
  return {s.failures == 0 && s.min_slack >= -1e-9 && elapsed < 60.0 && gap < 1e-12,
          std::to_string(s.trials) + " trials, " + std::to_string(s.failures) + " failures, min slack " +
              format_double(s.min_slack) + ", |+>,Z,X gap " + format_double(gap) + ", " +
              format_fixed(elapsed, 2) + " s"};
}

Outcome transfer_symmetry() {
  const auto s = campaigns::run_symmetry(10000, {2, 3, 4, 5}, kSeed);
  return {s.failures == 0 && s.max_asymmetry <= 1e-12,
          std::to_string(s.pairs) + " pairs, max asymmetry " + format_double(s.max_asymmetry)};
}

Outcome tsirelson() {
  campaigns::TsirelsonOptions opts;
  opts.samples = 100000;
  opts.refine_top = 100;
  const auto s = campaigns::run_tsirelson(campaigns::ndwu_verdict(), kSeed, opts);
  const auto singlet = quantum::two_qubit_behavior(
      quantum::singlet(), quantum::pauli_z(), quantum::pauli_x(), quantum::BlochObservable::along(1, 0, 1),
      quantum::BlochObservable::along(-1, 0, 1));
  const double gap = std::abs(std::abs(chsh(singlet)) - campaigns::kTsirelson);
  return {s.violations == 0 && gap <= 1e-9,
          std::to_string(s.samples) + " samples, " + std::to_string(s.accepted) + " accepted, best " +
              format_double(s.best_refined) + " after refinement, " + std::to_string(s.violations) +
              " above 2sqrt2+1e-6, singlet gap " + format_double(gap)};
}

Outcome quantum_consistency() {
  const auto t0 = Clock::now();
  const auto s = campaigns::run_quantum_criterion(10000, kSeed);
  const double elapsed = seconds_since(t0);
  return {s.criterion_failures == 0 && elapsed < 30.0,
          std::to_string(s.trials) + " behaviors, " + std::to_string(s.criterion_failures) +
              " violations (npa " + std::to_string(s.npa_failures) + ", relation " +
              std::to_string(s.relation_failures) + "), " + format_fixed(elapsed, 2) + " s"};
}

Outcome boundary_one() {
  const sweep::Verdict v = [](const boxes::FamilyPoint& p) { return criteria::ndwu_family_boundary(p); };
  const double ra = sweep::boundary_bisect(v, {}, {1, 0, 0});
  const double rb = sweep::boundary_bisect(v, {}, {0, 1, 0});
  long bad = 0, points = 0;
  for (int i = 0; i < 400; ++i)
    for (int j = 0; j < 400; ++j) {
      const double a = i / 399.0, b = j / 399.0;
      if (a + b > 1.0) continue;
      ++points;
      const bool disk = a * a + b * b <= 0.5;
      if (criteria::ndwu_family_boundary({a, b, 0}) != disk &&
          std::abs(std::hypot(a, b) - kInvSqrt2) > 1e-7)
        ++bad;
    }
  const bool ok = std::abs(ra - kInvSqrt2) <= 1e-9 && std::abs(rb - kInvSqrt2) <= 1e-9 && bad == 0;
  return {ok, "alpha ray " + format_double(ra) + ", beta ray " + format_double(rb) + ", " +
                  std::to_string(bad) + " disagreements off the circle in " + std::to_string(points) + " points"};
}

Outcome boundary_two() {
  long points = 0, ndwu_out_npa = 0, npa_out_ic = 0, b2_mismatch = 0;
  std::string strict1, strict2;
  for (int i = 0; i < 400; ++i)
    for (int j = 0; j < 400; ++j) {
      const double a = i / 399.0, t = j / 399.0;
      if (a + t > 1.0) continue;
      ++points;
      const bool in_ndwu = criteria::ndwu_family_boundary({a, 0, t});
      const bool in_npa = criteria::npa_tlm(boxes::noisy_family({a, 0, t}));
      const bool in_ic = criteria::ic_family_boundary(a, t);
      if (in_ndwu && !in_npa) ++ndwu_out_npa;
      if (in_npa && !in_ic) ++npa_out_ic;
      if (criteria::boundary2(a, t) != in_ndwu) ++b2_mismatch;
      // report the first strict witness on the grid row nearest tau = 0.3
      const std::string where = "(" + format_fixed(a, 4) + "," + format_fixed(t, 4) + ")";
      if (j == 120 && !in_ndwu && in_npa && strict1.empty()) strict1 = where;
      if (j == 120 && !in_npa && in_ic && strict2.empty()) strict2 = where;
    }
  const bool ok = ndwu_out_npa == 0 && npa_out_ic == 0 && b2_mismatch == 0 && !strict1.empty() && !strict2.empty();
  return {ok, std::to_string(points) + " points, NDWU\\NPA " + std::to_string(ndwu_out_npa) + ", NPA\\IC " +
                  std::to_string(npa_out_ic) + ", witnesses NPA\\NDWU " + (strict1.empty() ? "none" : strict1) +
                  " IC\\NPA " + (strict2.empty() ? "none" : strict2) + ", boundary-2 mismatches " +
                  std::to_string(b2_mismatch)};
}

Outcome closed_vs_generic() {
  const auto t0 = Clock::now();
  long points = 0, disagree = 0, unexplained = 0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j)
      for (int k = 0; k < 20; ++k) {
        const boxes::FamilyPoint p{i / 99.0, j / 99.0, 0.95 * k / 19.0};
        if (!boxes::in_family_simplex(p, 0.0)) continue;
        ++points;
        const bool closed = criteria::ndwu_family_boundary(p);
        if (closed == criterion(boxes::noisy_family(p)).overall) continue;
        ++disagree;
        bool near = false;
        for (double e : {-1e-7, 1e-7})
          for (const boxes::FamilyPoint& q : {boxes::FamilyPoint{p.alpha + e, p.beta, p.tau},
                                              boxes::FamilyPoint{p.alpha, p.beta + e, p.tau},
                                              boxes::FamilyPoint{p.alpha, p.beta, p.tau + e}})
            if (boxes::in_family_simplex(q, 0.0) && criteria::ndwu_family_boundary(q) != closed) near = true;
        if (!near) ++unexplained;
      }
  const double elapsed = seconds_since(t0);
  return {unexplained == 0 && elapsed < 120.0,
          std::to_string(points) + " points, " + std::to_string(disagree) + " disagreements, " +
              std::to_string(unexplained) + " farther than 1e-7 from the surface, " + format_fixed(elapsed, 2) + " s"};
}

Outcome aqc() {
  const auto r = campaigns::aqc_report();
  return {r.matches_reference() && r.npa_satisfied,
          "max_lhs " + format_double(r.max_lhs) + " (" + r.max_lhs_rounded + "), min_rhs " + format_double(r.min_rhs) +
              " (" + r.min_rhs_rounded + "), " + (r.ndwu_violated ? "violated" : "satisfied") + ", npa " +
              (r.npa_satisfied ? "satisfied" : "violated")};
}

Outcome table1() {
  const auto t = campaigns::compute_table1();
  std::string detail;
  for (std::size_t r = 0; r < 4; ++r) {
    if (r) detail += " / ";
    for (std::size_t c = 0; c < 3; ++c) detail += std::string(c ? "," : "") + (t.cells[r][c] ? "Yes" : "No");
  }
  for (const auto& m : t.mismatches) detail += "; " + m;
  return {t.matches_reference(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria_list{
      {"uncertainty-disturbance fuzz", relation_fuzz},
      {"transfer-probability symmetry", transfer_symmetry},
      {"Tsirelson bound from the correlation criterion", tsirelson},
      {"quantum behaviors satisfy the correlation criterion", quantum_consistency},
      {"boundary 1", boundary_one},
      {"boundary 2 and criteria ordering", boundary_two},
      {"closed-form boundary vs generic criterion", closed_vs_generic},
      {"almost-quantum exclusion", aqc},
      {"criteria comparison table", table1},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria_list) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
