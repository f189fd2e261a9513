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

// Closed-form quantum-boundary conditions for the noisy box family
// alpha PR + beta PR' + tau L + noise, and two behavior-level necessary
// conditions they are compared with (level-1 NPA/TLM, two-bias IC).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ndwu/behavior.hpp"
#include "ndwu/boxes.hpp"

namespace ndwu::criteria {

using boxes::FamilyPoint;

inline constexpr double kBoundaryTol = 1e-12;
inline constexpr double kArcsinGuard = 1e-9;

namespace detail {

inline double root1m(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }

/// asin with a guard: |x| beyond 1 + kArcsinGuard marks the point outside.
inline bool guarded_asin(double x, double& out) {
  if (!std::isfinite(x) || std::abs(x) > 1.0 + kArcsinGuard) return false;
  out = std::asin(std::clamp(x, -1.0, 1.0));
  return true;
}

}  // namespace detail

/// Uncertainty-disturbance boundary of the family:
///
///   sqrt(1-x+^2) sqrt(1-x-^2) - |alpha^2-beta^2|/(1-tau)^2
///     >= y z - sqrt(1-y^2) sqrt(1-z^2)
///
/// with x+- = (alpha +- beta)/(1-tau), y = (alpha+beta+2tau)/(1+tau),
/// z = (|alpha-beta|+2tau)/(1+tau). Points with x+ > 1 or y > 1 are outside.
inline bool ndwu_family_boundary(const FamilyPoint& pt, double tol = kBoundaryTol) {
  const double a = pt.alpha, b = pt.beta, t = pt.tau;
  if (t >= 1.0 - tol) return std::abs(a) <= tol && std::abs(b) <= tol;
  const double xp = (a + b) / (1.0 - t);
  const double xm = (a - b) / (1.0 - t);
  const double y = (a + b + 2.0 * t) / (1.0 + t);
  const double z = (std::abs(a - b) + 2.0 * t) / (1.0 + t);
  if (xp > 1.0 + tol || y > 1.0 + tol) return false;
  const double lhs =
      detail::root1m(xp) * detail::root1m(xm) - std::abs(a * a - b * b) / ((1.0 - t) * (1.0 - t));
  const double rhs = y * z - detail::root1m(y) * detail::root1m(z);
  return lhs >= rhs - tol;
}

/// tau = 0 slice: alpha^2 + beta^2 <= 1/2.
inline bool boundary1(double alpha, double beta, double tol = kBoundaryTol) {
  return alpha * alpha + beta * beta <= 0.5 + tol;
}

/// beta = 0 slice: (alpha+2tau)^2/(1+tau)^2 + alpha^2/(1-tau)^2 <= 1.
inline bool boundary2(double alpha, double tau, double tol = kBoundaryTol) {
  if (tau >= 1.0 - tol) return std::abs(alpha) <= tol;
  const double y = (alpha + 2.0 * tau) / (1.0 + tau);
  const double x = alpha / (1.0 - tau);
  return y * y + x * x <= 1.0 + tol;
}

/// Level-1 NPA (TLM) condition on marginal-normalized correlators
/// D_nu,mu = (C_nu,mu - <A_nu><B_mu>) / sqrt((1-<A_nu>^2)(1-<B_mu>^2)):
/// for each choice of flagged pair, |sum of the other three asin D - asin D_flagged| <= pi.
/// A wing with a deterministic marginal is declared satisfied.
inline bool npa_tlm(const Behavior& behavior, double tol = kBoundaryTol) {
  std::array<double, 2> alice{}, bob{};
  for (int k = 0; k < 2; ++k) {
    alice[k] = marginal_expectation(behavior, Party::Alice, k);
    bob[k] = marginal_expectation(behavior, Party::Bob, k);
    if (std::abs(alice[k]) >= 1.0 - kBoundaryTol || std::abs(bob[k]) >= 1.0 - kBoundaryTol) {
      return true;
    }
  }
  std::array<double, 4> angles{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) {
      const double d = (correlator(behavior, nu, mu) - alice[nu] * bob[mu]) /
                       std::sqrt((1.0 - alice[nu] * alice[nu]) * (1.0 - bob[mu] * bob[mu]));
      if (!detail::guarded_asin(d, angles[static_cast<std::size_t>(nu * 2 + mu)])) return false;
    }
  const double total = angles[0] + angles[1] + angles[2] + angles[3];
  for (double flagged : angles) {
    if (std::abs(total - 2.0 * flagged) > std::numbers::pi + tol) return false;
  }
  return true;
}

enum class NpaFamilyForm {
  /// |3 asin((a+t-t^2)/(1-t^2)) - asin((t-t^2-a)/(1-t^2))| <= pi; npa_tlm on the family.
  Derived,
  /// Second numerator as printed, (a-t-t^2), over (1-t^2).
  PrintedNumerator,
  /// Fully as printed: first denominator (1-beta^2) = 1 on the beta = 0 slice.
  Printed,
};

/// Level-1 NPA boundary of the beta = 0 slice.
inline bool npa_family_boundary2(double alpha, double tau, NpaFamilyForm form = NpaFamilyForm::Derived,
                                 double tol = kBoundaryTol) {
  if (tau >= 1.0 - tol) return std::abs(alpha) <= tol;
  const double denom = 1.0 - tau * tau;
  const double first = (alpha + tau - tau * tau) / (form == NpaFamilyForm::Printed ? 1.0 : denom);
  const double second = form == NpaFamilyForm::Derived ? (tau - tau * tau - alpha) / denom
                                                       : (alpha - tau - tau * tau) / denom;
  double s1 = 0.0, s2 = 0.0;
  if (!detail::guarded_asin(first, s1) || !detail::guarded_asin(second, s2)) return false;
  return std::abs(3.0 * s1 - s2) <= std::numbers::pi + tol;
}

enum class IcFamilyForm {
  /// (alpha+tau)^2 + alpha^2 <= 1: the two-bias condition on the family.
  Bias,
  /// (alpha+tau)^2 + tau^2 <= 1.
  Printed,
};

/// Information-causality boundary of the beta = 0 slice. The strict
/// inequality is tested as <= 1 + tol.
inline bool ic_family_boundary(double alpha, double tau, IcFamilyForm form = IcFamilyForm::Bias,
                               double tol = kBoundaryTol) {
  const double second = form == IcFamilyForm::Bias ? alpha : tau;
  return (alpha + tau) * (alpha + tau) + second * second <= 1.0 + tol;
}

/// Two-bias information-causality condition E_I^2 + E_II^2 <= 1, maximized
/// over the eight relabeled CHSH sign patterns and both directions. For the
/// pattern s_nu,mu and direction Alice -> Bob, E_I = (s00 C00 + s10 C10)/2 and
/// E_II = (s01 C01 + s11 C11)/2.
inline bool ic_bias_condition(const Behavior& behavior, double tol = kBoundaryTol) {
  std::array<std::array<double, 2>, 2> c{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) c[nu][mu] = correlator(behavior, nu, mu);
  double worst = 0.0;
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s)
      for (int l = 0; l < 2; ++l) {
        std::array<std::array<double, 2>, 2> sc{};
        for (int nu = 0; nu < 2; ++nu)
          for (int mu = 0; mu < 2; ++mu)
            sc[nu][mu] = sign_of(nu * mu + t * nu + s * mu + l) * c[nu][mu];
        const double e1 = (sc[0][0] + sc[1][0]) / 2.0, e2 = (sc[0][1] + sc[1][1]) / 2.0;
        const double f1 = (sc[0][0] + sc[0][1]) / 2.0, f2 = (sc[1][0] + sc[1][1]) / 2.0;
        worst = std::max({worst, e1 * e1 + e2 * e2, f1 * f1 + f2 * f2});
      }
  return worst <= 1.0 + tol;
}

/// Mixed-correlation line through (alpha, tau) = (0, 1) and (1/sqrt2, 0):
/// tau + sqrt2 alpha <= 1.
inline bool mc_boundary_line(double alpha, double tau, double tol = kBoundaryTol) {
  return tau + std::numbers::sqrt2 * alpha <= 1.0 + tol;
}

/// max{4 alpha + 2 tau, 4 beta + 2 tau} <= 2 sqrt2.
inline bool tsirelson_family_screen(const FamilyPoint& pt, double tol = kBoundaryTol) {
  return std::max(4.0 * pt.alpha, 4.0 * pt.beta) + 2.0 * pt.tau <= 2.0 * std::numbers::sqrt2 + tol;
}

}  // namespace ndwu::criteria
