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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ndwu/boxes.hpp"
#include "ndwu/criteria.hpp"
#include "ndwu/criterion.hpp"
#include "oracles.hpp"

using namespace ndwu;
using namespace ndwu::criteria;
using boxes::noisy_family;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Verdict stable under +-eps moves along each axis.
template <class F>
bool stable(F f, double a, double t, double eps) {
  const bool v = f(a, t);
  for (double da : {-eps, 0.0, eps})
    for (double dt : {-eps, 0.0, eps}) {
      const double aa = std::max(0.0, a + da), tt = std::max(0.0, t + dt);
      if (aa + tt <= 1.0 && f(aa, tt) != v) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("family boundary examples") {
  CHECK(ndwu_family_boundary({kInvSqrt2, 0, 0}));
  CHECK_FALSE(ndwu_family_boundary({kInvSqrt2 + 1e-9, 0, 0}));
  CHECK_FALSE(ndwu_family_boundary({0.6, 0.6, 0}));
  CHECK(ndwu_family_boundary({0.5, 0, 0.2}));
  CHECK(ndwu_family_boundary({0, 0, 1}));
  CHECK(ndwu_family_boundary({0, 0, 0}));
}

TEST_CASE("boundary reductions") {
  CHECK(boundary1(0.5, 0.5));
  CHECK_FALSE(boundary1(0.5, 0.51));
  CHECK(boundary2(0, 1.0 / 3.0));
  CHECK(boundary2(kInvSqrt2, 0));
  CHECK_FALSE(boundary2(kInvSqrt2 + 1e-9, 0));
}

TEST_CASE("family boundary is symmetric in alpha and beta") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = unit(rng), b = unit(rng) * (1 - a), t = unit(rng) * (1 - a - b);
    CHECK(ndwu_family_boundary({a, b, t}) == ndwu_family_boundary({b, a, t}));
  }
}

TEST_CASE("slices reduce to boundary 1 and boundary 2") {
  int mismatches = 0;
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; i + j <= 200; ++j) {
      const double x = i / 200.0, y = j / 200.0;
      if (stable([](double a, double b) { return boundary1(a, b); }, x, y, 1e-9) &&
          ndwu_family_boundary({x, y, 0}) != boundary1(x, y))
        ++mismatches;
      if (stable([](double a, double t) { return boundary2(a, t); }, x, y, 1e-9) &&
          ndwu_family_boundary({x, 0, y}) != boundary2(x, y))
        ++mismatches;
    }
  CHECK(mismatches == 0);
}

TEST_CASE("level-1 NPA on named behaviors") {
  CHECK(npa_tlm(noisy_family({kInvSqrt2, 0, 0})));
  CHECK_FALSE(npa_tlm(noisy_family({kInvSqrt2 + 1e-6, 0, 0})));
  CHECK_FALSE(npa_tlm(boxes::pr_box()));
  CHECK(npa_tlm(boxes::uniform_box()));
  CHECK(npa_tlm(boxes::local_box(1, 0, 1, 1)));
  CHECK(npa_tlm(boxes::aqc_behavior()));
}

TEST_CASE("family NPA forms") {
  CHECK(npa_family_boundary2(kInvSqrt2, 0));
  CHECK_FALSE(npa_family_boundary2(kInvSqrt2 + 1e-9, 0));
  CHECK(npa_family_boundary2(0, 0));
  CHECK(npa_family_boundary2(0.75, 0.2) == npa_tlm(noisy_family({0.75, 0, 0.2})));
  // the printed numerator leaves tau = 0 unconstrained up to alpha = 1
  CHECK(npa_family_boundary2(0.99, 0, NpaFamilyForm::PrintedNumerator));
  CHECK(npa_family_boundary2(0.99, 0, NpaFamilyForm::Printed));
}

TEST_CASE("derived family NPA form equals level-1 NPA on the family") {
  int compared = 0;
  for (int i = 0; i <= 150; ++i)
    for (int j = 0; i + j <= 150; ++j) {
      const double a = i / 150.0, t = j / 150.0;
      if (t > 0.95) continue;
      auto f = [](double x, double y) { return npa_family_boundary2(x, y); };
      if (!stable(f, a, t, 1e-7)) continue;
      CHECK(f(a, t) == npa_tlm(noisy_family({a, 0, t})));
      ++compared;
    }
  CHECK(compared > 10000);
}

TEST_CASE("family IC forms") {
  CHECK(ic_family_boundary(0.8, 0.1, IcFamilyForm::Printed));
  CHECK(ic_family_boundary(1.0, 0.0, IcFamilyForm::Printed));
  CHECK_FALSE(ic_family_boundary(0.9, 0.4, IcFamilyForm::Printed));
  CHECK(ic_family_boundary(kInvSqrt2, 0));
  CHECK_FALSE(ic_family_boundary(kInvSqrt2 + 1e-9, 0));
  CHECK_FALSE(ic_family_boundary(0.8, 0.1));
}

TEST_CASE("two-bias IC condition agrees with the family form on beta = 0") {
  for (int i = 0; i <= 120; ++i)
    for (int j = 0; i + j <= 120; ++j) {
      const double a = i / 120.0, t = j / 120.0;
      auto f = [](double x, double y) { return ic_family_boundary(x, y); };
      if (!stable(f, a, t, 1e-9)) continue;
      CHECK(f(a, t) == ic_bias_condition(noisy_family({a, 0, t})));
    }
  CHECK(ic_bias_condition(boxes::aqc_behavior()));
  CHECK_FALSE(ic_bias_condition(boxes::pr_box()));
}

TEST_CASE("two-bias IC implies the Tsirelson bound") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto extremals = boxes::extremal_boxes();
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<double> w(24);
    double total = 0.0;
    for (auto& x : w) total += (x = std::pow(unit(rng), 6.0));
    for (auto& x : w) x /= total;
    const auto b = boxes::mix(extremals, w);
    if (ic_bias_condition(b)) CHECK(max_chsh_over_relabelings(b) <= 2.0 * std::numbers::sqrt2 + 1e-9);
  }
}

TEST_CASE("mixed-correlation line") {
  CHECK(mc_boundary_line(kInvSqrt2, 0));
  CHECK_FALSE(mc_boundary_line(kInvSqrt2 + 1e-9, 0));
  CHECK(mc_boundary_line(0, 1));
  CHECK_FALSE(mc_boundary_line(0.5, 0.5));
}

TEST_CASE("nesting on the beta = 0 slice") {
  int ndwu_not_npa = 0, npa_not_ic = 0;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const double a = i / 199.0, t = j / 199.0;
      if (a + t > 1.0) continue;
      const bool in_ndwu = ndwu_family_boundary({a, 0, t});
      const bool in_npa = npa_tlm(noisy_family({a, 0, t}));
      const bool in_ic = ic_family_boundary(a, t);
      if (in_ndwu && !in_npa) ++ndwu_not_npa;
      if (in_npa && !in_ic) ++npa_not_ic;
    }
  CHECK(ndwu_not_npa == 0);
  CHECK(npa_not_ic == 0);
}

TEST_CASE("closed-form family boundary agrees with the generic criterion and a c-scan") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int compared = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const double a = unit(rng), b = unit(rng) * (1 - a), t = std::min(0.95, unit(rng) * (1 - a - b));
    const bool closed = ndwu_family_boundary({a, b, t});
    bool near = false;
    for (double e : {-1e-6, 1e-6}) {
      for (const boxes::FamilyPoint& q : {boxes::FamilyPoint{a + e, b, t}, boxes::FamilyPoint{a, b + e, t},
                                          boxes::FamilyPoint{a, b, t + e}})
        if (boxes::in_family_simplex(q) && ndwu_family_boundary(q) != closed) near = true;
    }
    if (near) continue;
    CHECK(closed == criterion(noisy_family({a, b, t})).overall);
    const auto table = oracle::family_table(a, b, t);
    const double scan = std::max(oracle::scan_side(table, true), oracle::scan_side(table, false));
    if (std::abs(scan) > 1e-3) CHECK(closed == (scan <= 0.0));
    ++compared;
  }
  CHECK(compared > 2500);
}

TEST_CASE("family Tsirelson screen") {
  CHECK(tsirelson_family_screen({kInvSqrt2, 0, 0}));
  CHECK_FALSE(tsirelson_family_screen({kInvSqrt2 + 1e-9, 0, 0}));
  CHECK(tsirelson_family_screen({0, kInvSqrt2, 0}));
}
