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

// Grid sweeps and ray bisection over the (alpha, beta, tau) family simplex,
// producing plot-ready boundary datasets.

#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ndwu/boxes.hpp"
#include "ndwu/criteria.hpp"
#include "ndwu/criterion.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"

namespace ndwu::sweep {

using boxes::FamilyPoint;
using Verdict = std::function<bool(const FamilyPoint&)>;

struct NamedCriterion {
  std::string name;
  Verdict verdict;
  /// Formula only defined on the beta = 0 slice.
  bool needs_beta_zero = false;
};

struct CriterionOptions {
  criteria::NpaFamilyForm npa_form = criteria::NpaFamilyForm::Derived;
  double behavior_tol = kDefaultTol;
};

inline std::vector<std::string> known_criteria() {
  return {"ndwu",   "ndwu-generic", "npa",        "npa-family", "ic",
          "ic-family", "ic-printed", "mc",        "tsirelson"};
}

/// ndwu         closed-form family boundary
/// ndwu-generic correlation criterion evaluated on the reconstructed behavior
/// npa          level-1 NPA/TLM on the reconstructed behavior
/// npa-family   closed-form NPA boundary (beta = 0)
/// ic           two-bias IC condition on the reconstructed behavior
/// ic-family    (alpha+tau)^2 + alpha^2 <= 1 (beta = 0)
/// ic-printed   (alpha+tau)^2 + tau^2 <= 1 (beta = 0)
/// mc           tau + sqrt2 alpha <= 1 (beta = 0)
/// tsirelson    max{4alpha+2tau, 4beta+2tau} <= 2 sqrt2
inline NamedCriterion make_criterion(std::string_view name, const CriterionOptions& opts = {}) {
  const double tol = opts.behavior_tol;
  if (name == "ndwu") return {"ndwu", [](const FamilyPoint& p) { return criteria::ndwu_family_boundary(p); }};
  if (name == "ndwu-generic") {
    return {"ndwu-generic",
            [tol](const FamilyPoint& p) { return criterion(boxes::noisy_family(p, tol)).overall; }};
  }
  if (name == "npa") {
    return {"npa", [tol](const FamilyPoint& p) { return criteria::npa_tlm(boxes::noisy_family(p, tol)); }};
  }
  if (name == "npa-family") {
    const auto form = opts.npa_form;
    return {"npa-family",
            [form](const FamilyPoint& p) { return criteria::npa_family_boundary2(p.alpha, p.tau, form); },
            true};
  }
  if (name == "ic") {
    return {"ic",
            [tol](const FamilyPoint& p) { return criteria::ic_bias_condition(boxes::noisy_family(p, tol)); }};
  }
  if (name == "ic-family") {
    return {"ic-family", [](const FamilyPoint& p) { return criteria::ic_family_boundary(p.alpha, p.tau); },
            true};
  }
  if (name == "ic-printed") {
    return {"ic-printed",
            [](const FamilyPoint& p) {
              return criteria::ic_family_boundary(p.alpha, p.tau, criteria::IcFamilyForm::Printed);
            },
            true};
  }
  if (name == "mc") {
    return {"mc", [](const FamilyPoint& p) { return criteria::mc_boundary_line(p.alpha, p.tau); }, true};
  }
  if (name == "tsirelson") {
    return {"tsirelson", [](const FamilyPoint& p) { return criteria::tsirelson_family_screen(p); }};
  }
  throw Error(ErrorKind::InvalidInput, "unknown criterion \"" + std::string(name) + "\"");
}

/// Either a fixed value or `count` >= 2 evenly spaced values over [lo, hi].
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;  // 0 marks a fixed axis

  static Axis fixed(double value) { return {value, value, 0}; }
  static Axis range(double lo, double hi, int count) { return {lo, hi, count}; }

  bool is_fixed() const { return count == 0; }
  int size() const { return is_fixed() ? 1 : count; }
  double value(int i) const {
    if (is_fixed()) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

struct GridSpec {
  Axis alpha = Axis::range(0.0, 1.0, 2);
  Axis beta = Axis::fixed(0.0);
  Axis tau = Axis::range(0.0, 1.0, 2);
};

struct DatasetRow {
  FamilyPoint point;
  std::vector<bool> verdicts;
};

struct BoundaryDataset {
  std::vector<std::string> criteria;
  std::vector<DatasetRow> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < criteria.size(); ++i)
      if (criteria[i] == name) return i;
    throw Error(ErrorKind::InvalidInput, "dataset has no column \"" + std::string(name) + "\"");
  }
};

inline void validate_grid(const GridSpec& grid) {
  for (const Axis* axis : {&grid.alpha, &grid.beta, &grid.tau}) {
    if (!axis->is_fixed() && axis->count < 2) {
      throw Error(ErrorKind::InvalidGrid, "resolution " + std::to_string(axis->count) + " < 2");
    }
    if (!std::isfinite(axis->lo) || !std::isfinite(axis->hi) || axis->hi < axis->lo) {
      throw Error(ErrorKind::InvalidGrid, "axis bounds must be finite with lo <= hi");
    }
  }
}

/// One row per grid point inside the family simplex, in (alpha, beta, tau)
/// lexicographic order.
inline BoundaryDataset sweep_grid(const std::vector<NamedCriterion>& criteria_list, const GridSpec& grid) {
  validate_grid(grid);
  if (criteria_list.empty()) throw Error(ErrorKind::InvalidGrid, "no criteria requested");
  for (const auto& c : criteria_list) {
    if (c.needs_beta_zero && !(grid.beta.is_fixed() && grid.beta.lo == 0.0)) {
      throw Error(ErrorKind::InvalidGrid, "criterion \"" + c.name + "\" needs a beta = 0 slice");
    }
  }
  BoundaryDataset out;
  for (const auto& c : criteria_list) out.criteria.push_back(c.name);
  for (int i = 0; i < grid.alpha.size(); ++i)
    for (int j = 0; j < grid.beta.size(); ++j)
      for (int k = 0; k < grid.tau.size(); ++k) {
        const FamilyPoint pt{grid.alpha.value(i), grid.beta.value(j), grid.tau.value(k)};
        if (!boxes::in_family_simplex(pt)) continue;
        DatasetRow row{pt, {}};
        row.verdicts.reserve(criteria_list.size());
        for (const auto& c : criteria_list) row.verdicts.push_back(c.verdict(pt));
        out.rows.push_back(std::move(row));
      }
  return out;
}

inline void write_csv(std::ostream& out, const BoundaryDataset& dataset) {
  out << "alpha,beta,tau";
  for (const auto& name : dataset.criteria) out << ',' << name;
  out << '\n';
  for (const auto& row : dataset.rows) {
    out << format_double(row.point.alpha) << ',' << format_double(row.point.beta) << ','
        << format_double(row.point.tau);
    for (bool v : row.verdicts) out << ',' << (v ? '1' : '0');
    out << '\n';
  }
}

/// Largest t with origin + t * direction inside the simplex.
inline double ray_extent(const FamilyPoint& origin, const FamilyPoint& direction) {
  if (!boxes::in_family_simplex(origin)) {
    throw Error(ErrorKind::InvalidGrid, "ray origin outside the family simplex");
  }
  double t_max = std::numeric_limits<double>::infinity();
  const double o[3] = {origin.alpha, origin.beta, origin.tau};
  const double d[3] = {direction.alpha, direction.beta, direction.tau};
  double d_sum = 0.0, o_sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (d[i] < 0.0) t_max = std::min(t_max, std::max(0.0, o[i]) / -d[i]);
    d_sum += d[i];
    o_sum += o[i];
  }
  if (d_sum > 0.0) t_max = std::min(t_max, std::max(0.0, 1.0 - o_sum) / d_sum);
  if (!std::isfinite(t_max) || t_max <= 0.0) {
    throw Error(ErrorKind::InvalidGrid, "ray has no extent inside the simplex");
  }
  return t_max;
}

/// Critical t along origin + t * direction where `verdict` changes, to
/// within a bracket of width <= tol. The verdicts at t = 0 and at the
/// simplex exit must differ.
inline double boundary_bisect(const Verdict& verdict, const FamilyPoint& origin,
                              const FamilyPoint& direction, double tol = 1e-12) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "bisection tolerance must be positive");
  const double t_max = ray_extent(origin, direction);
  auto at = [&](double t) {
    FamilyPoint p{origin.alpha + t * direction.alpha, origin.beta + t * direction.beta,
                  origin.tau + t * direction.tau};
    // clip rounding just past the faces
    p.alpha = std::max(0.0, p.alpha);
    p.beta = std::max(0.0, p.beta);
    p.tau = std::max(0.0, p.tau);
    return verdict(p);
  };
  double lo = 0.0, hi = t_max;
  const bool v_lo = at(lo);
  if (v_lo == at(hi)) {
    throw Error(ErrorKind::NoSignChange, "verdict is " + std::string(v_lo ? "true" : "false") +
                                             " at both ends of the ray");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (at(mid) == v_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct RayResult {
  int ray_id = 0;
  double t_critical = 0.0;
};

/// Plane spanned by two family coordinates, with the third held at zero.
enum class Plane { AlphaTau, AlphaBeta };

/// `count` rays from the origin of `plane` at angles (k + 1/2)/count * pi/2;
/// ray k has unit direction (cos, sin) in the plane's (first, second) axes.
inline std::vector<RayResult> radial_bisect(const Verdict& verdict, Plane plane, int count,
                                            double tol = 1e-12) {
  if (count < 1) throw Error(ErrorKind::InvalidGrid, "need at least one ray");
  std::vector<RayResult> out;
  for (int k = 0; k < count; ++k) {
    const double angle = (k + 0.5) / count * std::numbers::pi / 2.0;
    FamilyPoint dir{std::cos(angle), 0.0, 0.0};
    (plane == Plane::AlphaTau ? dir.tau : dir.beta) = std::sin(angle);
    out.push_back({k, boundary_bisect(verdict, FamilyPoint{}, dir, tol)});
  }
  return out;
}

inline void write_rays_csv(std::ostream& out, const std::vector<RayResult>& rays) {
  out << "ray_id,t_critical\n";
  for (const auto& r : rays) out << r.ray_id << ',' << format_double(r.t_critical) << '\n';
}

}  // namespace ndwu::sweep
