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

// Bipartite behaviors p(ab|nu mu) in the two-setting, two-outcome Bell
// scenario. Alice measures A_nu with outcome a, Bob measures B_mu with
// outcome b. Every quantity here is a finite sum over the 16-entry table.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ndwu/error.hpp"
#include "ndwu/format.hpp"

namespace ndwu {

inline constexpr double kDefaultTol = 1e-9;

enum class Party { Alice, Bob };

inline const char* to_string(Party party) {
  return party == Party::Alice ? "alice" : "bob";
}

/// Flat storage order is (nu, mu, a, b), row-major.
using RawTable = std::array<double, 16>;

constexpr std::size_t table_index(int nu, int mu, int a, int b) {
  return static_cast<std::size_t>(((nu * 2 + mu) * 2 + a) * 2 + b);
}

constexpr int sign_of(int bit) { return (bit & 1) ? -1 : 1; }

/// A validated no-signaling behavior. Only obtainable through `validate`
/// (or the helpers that call it), so every instance satisfies the
/// positivity, normalization and no-signaling constraints within `tol()`.
class Behavior {
 public:
  static Behavior validate(std::span<const double> raw, double tol = kDefaultTol);

  /// Builds p(ab|nu mu) = [1 + (-1)^a <A_nu> + (-1)^b <B_mu> + (-1)^(a+b) C_nu,mu] / 4
  /// and validates it.
  static Behavior from_correlators(const std::array<double, 2>& alice,
                                   const std::array<double, 2>& bob,
                                   const std::array<std::array<double, 2>, 2>& corr,
                                   double tol = kDefaultTol);

  double p(int nu, int mu, int a, int b) const { return table_[table_index(nu, mu, a, b)]; }
  const RawTable& table() const noexcept { return table_; }
  double tol() const noexcept { return tol_; }

  bool operator==(const Behavior&) const = default;

 private:
  Behavior(const RawTable& table, double tol) : table_(table), tol_(tol) {}

  RawTable table_{};
  double tol_ = kDefaultTol;
};

inline Behavior Behavior::validate(std::span<const double> raw, double tol) {
  if (raw.size() != 16) {
    throw Error(ErrorKind::InvalidInput,
                "behavior table needs 16 entries, got " + std::to_string(raw.size()));
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorKind::InvalidInput, "tolerance must be positive and finite");
  }
  RawTable table{};
  std::copy(raw.begin(), raw.end(), table.begin());

  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const double v = table[table_index(nu, mu, a, b)];
          if (!std::isfinite(v)) {
            throw Error(ErrorKind::InvalidInput, "non-finite entry p(" + std::to_string(a) +
                                                     std::to_string(b) + "|" +
                                                     std::to_string(nu) + std::to_string(mu) + ")");
          }
          if (v < -tol) {
            throw Error(ErrorKind::NegativeProbability,
                        "p(" + std::to_string(a) + std::to_string(b) + "|" + std::to_string(nu) +
                            std::to_string(mu) + ") = " + format_double(v));
          }
        }

  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += table[table_index(nu, mu, 0, 0) + k];
      if (std::abs(sum - 1.0) > tol) {
        throw Error(ErrorKind::NotNormalized, "setting (nu,mu)=(" + std::to_string(nu) + "," +
                                                  std::to_string(mu) + "), residual " +
                                                  format_double(sum - 1.0));
      }
    }

  // Alice's marginal must not depend on mu, Bob's must not depend on nu.
  for (int nu = 0; nu < 2; ++nu)
    for (int a = 0; a < 2; ++a) {
      const double m0 = table[table_index(nu, 0, a, 0)] + table[table_index(nu, 0, a, 1)];
      const double m1 = table[table_index(nu, 1, a, 0)] + table[table_index(nu, 1, a, 1)];
      if (std::abs(m0 - m1) > tol) {
        throw Error(ErrorKind::SignalingDetected,
                    "side alice, a=" + std::to_string(a) + ", nu=" + std::to_string(nu) +
                        ", residual " + format_double(m0 - m1));
      }
    }
  for (int mu = 0; mu < 2; ++mu)
    for (int b = 0; b < 2; ++b) {
      const double m0 = table[table_index(0, mu, 0, b)] + table[table_index(0, mu, 1, b)];
      const double m1 = table[table_index(1, mu, 0, b)] + table[table_index(1, mu, 1, b)];
      if (std::abs(m0 - m1) > tol) {
        throw Error(ErrorKind::SignalingDetected,
                    "side bob, b=" + std::to_string(b) + ", mu=" + std::to_string(mu) +
                        ", residual " + format_double(m0 - m1));
      }
    }
  return Behavior(table, tol);
}

inline Behavior Behavior::from_correlators(const std::array<double, 2>& alice,
                                           const std::array<double, 2>& bob,
                                           const std::array<std::array<double, 2>, 2>& corr,
                                           double tol) {
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          table[table_index(nu, mu, a, b)] =
              (1.0 + sign_of(a) * alice[nu] + sign_of(b) * bob[mu] +
               sign_of(a + b) * corr[nu][mu]) /
              4.0;
        }
  return validate(table, tol);
}

/// p(outcome | setting) for one party, averaged over the other party's two
/// settings.
inline double marginal_probability(const Behavior& behavior, Party party, int setting,
                                   int outcome) {
  double sum = 0.0;
  for (int other = 0; other < 2; ++other)
    for (int o = 0; o < 2; ++o) {
      sum += party == Party::Alice ? behavior.p(setting, other, outcome, o)
                                   : behavior.p(other, setting, o, outcome);
    }
  return sum / 2.0;
}

/// <A_nu> or <B_mu>.
inline double marginal_expectation(const Behavior& behavior, Party party, int setting) {
  return marginal_probability(behavior, party, setting, 0) -
         marginal_probability(behavior, party, setting, 1);
}

/// C_nu,mu = <A_nu B_mu> = sum_ab (-1)^(a+b) p(ab|nu mu).
inline double correlator(const Behavior& behavior, int nu, int mu) {
  double sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) sum += sign_of(a + b) * behavior.p(nu, mu, a, b);
  return sum;
}

/// Expectation of `measured`'s observable with index `measured_setting`,
/// in the state prepared for `measured` when the other party measured
/// `conditioning_setting` and saw `conditioning_outcome`.
///
/// Alice: <A_nu>_{w_{b|mu}} = [p(0b|nu mu) - p(1b|nu mu)] / [p(0b|nu mu) + p(1b|nu mu)].
/// Throws ZeroWeightCondition when the conditioning probability is <= tol.
inline double conditional_expectation(const Behavior& behavior, Party measured,
                                      int measured_setting, int conditioning_setting,
                                      int conditioning_outcome) {
  const Party other = measured == Party::Alice ? Party::Bob : Party::Alice;
  const double weight =
      marginal_probability(behavior, other, conditioning_setting, conditioning_outcome);
  if (weight <= behavior.tol()) {
    throw Error(ErrorKind::ZeroWeightCondition,
                std::string("conditioning on ") + to_string(other) + " setting " +
                    std::to_string(conditioning_setting) + " outcome " +
                    std::to_string(conditioning_outcome) + " has weight " +
                    format_double(weight));
  }
  double plus = 0.0;
  double minus = 0.0;
  if (measured == Party::Alice) {
    plus = behavior.p(measured_setting, conditioning_setting, 0, conditioning_outcome);
    minus = behavior.p(measured_setting, conditioning_setting, 1, conditioning_outcome);
  } else {
    plus = behavior.p(conditioning_setting, measured_setting, conditioning_outcome, 0);
    minus = behavior.p(conditioning_setting, measured_setting, conditioning_outcome, 1);
  }
  return std::clamp((plus - minus) / (plus + minus), -1.0, 1.0);
}

/// sum_{ab nu mu} (-1)^(a+b+nu*mu) p(ab|nu mu) = C00 + C01 + C10 - C11.
inline double chsh(const Behavior& behavior) {
  return correlator(behavior, 0, 0) + correlator(behavior, 0, 1) + correlator(behavior, 1, 0) -
         correlator(behavior, 1, 1);
}

/// The CHSH functional whose maximizer is the nonlocal box with labels
/// (t, s, l): sum (-1)^(a+b+nu*mu+t*nu+s*mu+l) p(ab|nu mu). (0,0,0) is `chsh`.
inline double chsh_variant(const Behavior& behavior, int t, int s, int l) {
  double sum = 0.0;
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      sum += sign_of(nu * mu + t * nu + s * mu + l) * correlator(behavior, nu, mu);
  return sum;
}

/// Largest value over the eight relabeled CHSH functionals.
inline double max_chsh_over_relabelings(const Behavior& behavior) {
  double best = -4.0;
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s)
      for (int l = 0; l < 2; ++l) best = std::max(best, chsh_variant(behavior, t, s, l));
  return best;
}

/// A state prepared for `holder` by the other party's measurement.
/// holder == Alice is w_{b|mu}: setting = mu, outcome = b, weight = p(b|mu).
struct ConditionalState {
  Party holder = Party::Alice;
  int setting = 0;
  int outcome = 0;
  double weight = 0.0;
};

/// The conditional states of `holder` with weight > tol, ordered by
/// (setting, outcome).
inline std::vector<ConditionalState> conditional_state_set(const Behavior& behavior,
                                                           Party holder) {
  const Party other = holder == Party::Alice ? Party::Bob : Party::Alice;
  std::vector<ConditionalState> states;
  for (int setting = 0; setting < 2; ++setting)
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double w = marginal_probability(behavior, other, setting, outcome);
      if (w > behavior.tol()) states.push_back({holder, setting, outcome, w});
    }
  return states;
}

}  // namespace ndwu
