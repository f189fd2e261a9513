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

// The no-signaling box zoo: the 8 nonlocal and 16 local deterministic
// vertices of the polytope, the noisy three-parameter family
//
//   alpha PR + beta PR' + tau L + (1 - alpha - beta - tau) I/4,
//
// convex mixtures, and an almost-quantum point.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ndwu/behavior.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"

namespace ndwu::boxes {

/// 1/2 when a xor b = nu*mu xor t*nu xor s*mu xor l, else 0.
inline Behavior nonlocal_box(int t, int s, int l) {
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          table[table_index(nu, mu, a, b)] =
              ((a ^ b) == (((nu & mu) ^ (t & nu) ^ (s & mu) ^ l) & 1)) ? 0.5 : 0.0;
  return Behavior::validate(table);
}

/// Deterministic a = t*nu xor s, b = l*mu xor v.
inline Behavior local_box(int t, int s, int l, int v) {
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) {
      const int a = ((t & nu) ^ s) & 1;
      const int b = ((l & mu) ^ v) & 1;
      table[table_index(nu, mu, a, b)] = 1.0;
    }
  return Behavior::validate(table);
}

inline Behavior uniform_box() {
  RawTable table{};
  table.fill(0.25);
  return Behavior::validate(table);
}

inline Behavior pr_box() { return nonlocal_box(0, 0, 0); }
inline Behavior pr_prime_box() { return nonlocal_box(0, 1, 0); }
inline Behavior anti_pr_box() { return nonlocal_box(0, 0, 1); }

/// 8 nonlocal boxes (t,s,l lexicographic) followed by 16 local ones
/// (t,s,l,v lexicographic).
inline std::vector<Behavior> extremal_boxes() {
  std::vector<Behavior> out;
  out.reserve(24);
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s)
      for (int l = 0; l < 2; ++l) out.push_back(nonlocal_box(t, s, l));
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s)
      for (int l = 0; l < 2; ++l)
        for (int v = 0; v < 2; ++v) out.push_back(local_box(t, s, l, v));
  return out;
}

struct FamilyPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double tau = 0.0;
};

inline constexpr double kFamilyTol = 1e-12;

inline bool in_family_simplex(const FamilyPoint& pt, double tol = kFamilyTol) {
  return std::isfinite(pt.alpha) && std::isfinite(pt.beta) && std::isfinite(pt.tau) &&
         pt.alpha >= -tol && pt.beta >= -tol && pt.tau >= -tol &&
         pt.alpha + pt.beta + pt.tau <= 1.0 + tol;
}

inline void require_family_point(const FamilyPoint& pt) {
  if (!in_family_simplex(pt)) {
    throw Error(ErrorKind::InvalidFamilyPoint,
                "(alpha,beta,tau)=(" + format_double(pt.alpha) + "," + format_double(pt.beta) +
                    "," + format_double(pt.tau) + ") outside the simplex");
  }
}

/// Marginals are tau on both sides and C_nu,mu = (-1)^(nu mu) (alpha + (-1)^mu beta) + tau.
inline Behavior noisy_family(const FamilyPoint& pt, double tol = kDefaultTol) {
  require_family_point(pt);
  const double noise = (1.0 - pt.alpha - pt.beta - pt.tau) / 4.0;
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int ab = a ^ b;
          const double pr = ab == (nu & mu) ? 0.5 : 0.0;
          const double pr_prime = ab == ((nu & mu) ^ mu) ? 0.5 : 0.0;
          const double local = (a == 0 && b == 0) ? 1.0 : 0.0;
          table[table_index(nu, mu, a, b)] =
              pt.alpha * pr + pt.beta * pr_prime + pt.tau * local + noise;
        }
  return Behavior::validate(table, tol);
}

/// Entrywise convex combination. Weights must be >= -tol and sum to 1.
inline Behavior mix(const std::vector<Behavior>& behaviors, const std::vector<double>& weights,
                    double tol = kDefaultTol) {
  if (behaviors.empty() || behaviors.size() != weights.size()) {
    throw Error(ErrorKind::BadWeights, std::to_string(behaviors.size()) + " behaviors, " +
                                           std::to_string(weights.size()) + " weights");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < -tol) throw Error(ErrorKind::BadWeights, "weight " + format_double(w));
    total += w;
  }
  if (std::abs(total - 1.0) > tol) {
    throw Error(ErrorKind::BadWeights, "weights sum to " + format_double(total));
  }
  RawTable table{};
  for (std::size_t k = 0; k < behaviors.size(); ++k)
    for (std::size_t i = 0; i < table.size(); ++i) table[i] += weights[k] * behaviors[k].table()[i];
  return Behavior::validate(table, tol);
}

/// Almost-quantum point given as the probability of outcome 1 for
/// (A0, A1, B0, B1, A0B0, A1B0, A0B1, A1B1), joint entries meaning both
/// outcomes are 1. `swap_joint_order` exchanges the A1B0 and A0B1 entries.
inline Behavior aqc_behavior(bool swap_joint_order = false, double tol = kDefaultTol) {
  const std::array<double, 2> p_alice{9.0 / 20.0, 2.0 / 11.0};
  const std::array<double, 2> p_bob{2.0 / 11.0, 9.0 / 20.0};
  std::array<std::array<double, 2>, 2> p_joint{};
  p_joint[0][0] = 22.0 / 125.0;
  p_joint[1][0] = std::sqrt(2.0) / 9.0;
  p_joint[0][1] = 37.0 / 700.0;
  p_joint[1][1] = 22.0 / 125.0;
  if (swap_joint_order) std::swap(p_joint[1][0], p_joint[0][1]);

  std::array<double, 2> alice{}, bob{};
  std::array<std::array<double, 2>, 2> corr{};
  for (int k = 0; k < 2; ++k) {
    alice[k] = 1.0 - 2.0 * p_alice[k];
    bob[k] = 1.0 - 2.0 * p_bob[k];
  }
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      corr[nu][mu] = 1.0 - 2.0 * p_alice[nu] - 2.0 * p_bob[mu] + 4.0 * p_joint[nu][mu];
  return Behavior::from_correlators(alice, bob, corr, tol);
}

}  // namespace ndwu::boxes
