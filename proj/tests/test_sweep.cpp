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
#include <sstream>

#include "ndwu/campaigns.hpp"
#include "ndwu/sweep.hpp"

using namespace ndwu;
using namespace ndwu::sweep;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::AssertionFailed;
}

}  // namespace

TEST_CASE("bisection finds boundary 1 on both axes") {
  const auto ndwu = make_criterion("ndwu").verdict;
  CHECK_THAT(boundary_bisect(ndwu, {}, {1, 0, 0}), WithinAbs(kInvSqrt2, 1e-10));
  CHECK_THAT(boundary_bisect(ndwu, {}, {0, 1, 0}), WithinAbs(kInvSqrt2, 1e-10));
}

TEST_CASE("bisection errors") {
  const auto always = [](const FamilyPoint&) { return true; };
  CHECK(kind_of([&] { boundary_bisect(always, {}, {1, 0, 0}); }) == ErrorKind::NoSignChange);
  CHECK(kind_of([&] { boundary_bisect(always, {0.9, 0.9, 0}, {1, 0, 0}); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([&] { boundary_bisect(always, {}, {-1, 0, 0}); }) == ErrorKind::InvalidGrid);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.alpha = Axis::range(0, 1, 1);
  CHECK(kind_of([&] { sweep_grid({make_criterion("ndwu")}, g); }) == ErrorKind::InvalidGrid);
  GridSpec slice;
  slice.beta = Axis::range(0, 1, 3);
  CHECK(kind_of([&] { sweep_grid({make_criterion("npa-family")}, slice); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { make_criterion("bogus"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("sweep keeps only simplex points in lexicographic order") {
  GridSpec g;
  g.alpha = Axis::range(0, 1, 5);
  g.tau = Axis::range(0, 1, 5);
  const auto ds = sweep_grid({make_criterion("ndwu"), make_criterion("mc")}, g);
  CHECK(ds.rows.size() == 15);
  for (std::size_t i = 1; i < ds.rows.size(); ++i) {
    const auto& p = ds.rows[i - 1].point;
    const auto& q = ds.rows[i].point;
    CHECK((p.alpha < q.alpha || (p.alpha == q.alpha && p.tau < q.tau)));
  }
  std::ostringstream out;
  write_csv(out, ds);
  const auto text = out.str();
  CHECK(text.rfind("alpha,beta,tau,ndwu,mc\n", 0) == 0);
  CHECK(text.find("0,0,0,1,1\n") != std::string::npos);
}

TEST_CASE("nested regions on a 200x200 slice") {
  GridSpec g;
  g.alpha = Axis::range(0, 1, 200);
  g.tau = Axis::range(0, 1, 200);
  const auto ds = sweep_grid({make_criterion("ndwu"), make_criterion("npa"), make_criterion("ic-family")}, g);
  int bad = 0;
  for (const auto& row : ds.rows) {
    if (row.verdicts[0] && !row.verdicts[1]) ++bad;
    if (row.verdicts[1] && !row.verdicts[2]) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("radial rays and CSV") {
  const auto rays = radial_bisect(make_criterion("ndwu").verdict, Plane::AlphaBeta, 6);
  REQUIRE(rays.size() == 6);
  for (const auto& r : rays) CHECK_THAT(r.t_critical, WithinAbs(kInvSqrt2, 1e-9));
  std::ostringstream out;
  write_rays_csv(out, rays);
  CHECK(out.str().rfind("ray_id,t_critical\n0,", 0) == 0);
}

TEST_CASE("small campaigns are deterministic and clean") {
  const auto a = campaigns::run_relation_fuzz(500, {2, 3}, 42);
  const auto b = campaigns::run_relation_fuzz(500, {2, 3}, 42);
  CHECK(a.failures == 0);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.tightest.trial == b.tightest.trial);
  CHECK(campaigns::run_symmetry(200, {2, 5}, 1).failures == 0);
  const auto q = campaigns::run_quantum_criterion(300, 3);
  CHECK(q.criterion_failures == 0);
  CHECK(q.npa_failures == 0);
  CHECK(q.relation_failures == 0);
  CHECK(q.tsirelson_exceeded == 0);
  CHECK_THROWS_AS(campaigns::run_relation_fuzz(0, {2}, 1), Error);
  CHECK_THROWS_AS(campaigns::run_relation_fuzz(5, {9}, 1), Error);
}

TEST_CASE("almost-quantum report") {
  const auto r = campaigns::aqc_report();
  CHECK(r.matches_reference());
  CHECK(r.npa_satisfied);
  CHECK(r.ic_satisfied);
  const auto swapped = campaigns::aqc_report(true);
  CHECK_FALSE(swapped.ndwu_violated);
  CHECK_FALSE(swapped.matches_reference());
}
