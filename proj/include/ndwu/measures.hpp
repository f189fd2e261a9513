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

// Theory-independent uncertainty and disturbance measures for a pair of
// sharp measurements performed in sequence, and the uncertainty-disturbance
// relation built from them.
//
// Notation: the first measurement A0 has outcomes a, the second A1 has
// outcomes a'. A transfer matrix holds gamma[a'][a], the probability that
// the measured observable returns a' on the state left behind by outcome a
// of the preparing measurement.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ndwu/behavior.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"

namespace ndwu {

class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::vector<double> probs, double tol = kDefaultTol)
      : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
      throw Error(ErrorKind::InvalidDistribution, "need at least two outcomes");
    }
    double sum = 0.0;
    for (double p : probs_) {
      if (!std::isfinite(p) || p < -tol || p > 1.0 + tol) {
        throw Error(ErrorKind::InvalidDistribution, "entry " + format_double(p) + " outside [0,1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw Error(ErrorKind::InvalidDistribution, "sums to " + format_double(sum));
    }
  }
  OutcomeDistribution(std::initializer_list<double> probs)
      : OutcomeDistribution(std::vector<double>(probs)) {}

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

class TransferMatrix {
 public:
  /// rows[a'][a]; every column (fixed a) must be a distribution over a'.
  explicit TransferMatrix(std::vector<std::vector<double>> rows, double tol = kDefaultTol)
      : rows_(std::move(rows)) {
    if (rows_.size() < 2 || rows_.front().size() < 2) {
      throw Error(ErrorKind::InvalidTransferMatrix, "need at least 2x2 entries");
    }
    const std::size_t cols = rows_.front().size();
    for (const auto& row : rows_) {
      if (row.size() != cols) throw Error(ErrorKind::InvalidTransferMatrix, "ragged rows");
      for (double g : row) {
        if (!std::isfinite(g) || g < -tol || g > 1.0 + tol) {
          throw Error(ErrorKind::InvalidTransferMatrix,
                      "entry " + format_double(g) + " outside [0,1]");
        }
      }
    }
    for (std::size_t a = 0; a < cols; ++a) {
      double sum = 0.0;
      for (const auto& row : rows_) sum += row[a];
      if (std::abs(sum - 1.0) > tol) {
        throw Error(ErrorKind::InvalidTransferMatrix,
                    "column " + std::to_string(a) + " sums to " + format_double(sum));
      }
    }
  }

  /// Number of outcomes of the measured observable (rows).
  std::size_t outcomes() const noexcept { return rows_.size(); }
  /// Number of post-measurement states it is evaluated on (columns).
  std::size_t preparations() const noexcept { return rows_.front().size(); }
  double at(std::size_t outcome, std::size_t prepared) const { return rows_[outcome][prepared]; }

 private:
  std::vector<std::vector<double>> rows_;
};

/// sqrt(1 - sum_a p(a)^2).
inline double uncertainty(const OutcomeDistribution& dist) {
  double sum_sq = 0.0;
  for (double p : dist.probs()) sum_sq += p * p;
  return std::sqrt(std::max(0.0, 1.0 - sum_sq));
}

/// Unweighted sum over post-measurement states (columns of `reversed`) of the
/// uncertainty of the measured observable (rows) in that state.
///
/// For the relation on A0 -> A1 pass the reversed-order matrix
/// gamma[a][a'] = probability of A0 = a on the state left by A1 = a'.
inline double disturbed_uncertainty(const TransferMatrix& reversed) {
  double total = 0.0;
  for (std::size_t prepared = 0; prepared < reversed.preparations(); ++prepared) {
    double sum_sq = 0.0;
    for (std::size_t outcome = 0; outcome < reversed.outcomes(); ++outcome) {
      const double g = reversed.at(outcome, prepared);
      sum_sq += g * g;
    }
    total += std::sqrt(std::max(0.0, 1.0 - sum_sq));
  }
  return total;
}

/// p(a'|A0 -> A1) = sum_a p(a|A0) gamma[a'][a].
inline std::vector<double> disturbed_statistics(const OutcomeDistribution& first,
                                                const TransferMatrix& gamma) {
  if (gamma.preparations() != first.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "transfer matrix has " + std::to_string(gamma.preparations()) +
                    " columns, first measurement has " + std::to_string(first.size()) +
                    " outcomes");
  }
  std::vector<double> out(gamma.outcomes(), 0.0);
  for (std::size_t ap = 0; ap < gamma.outcomes(); ++ap)
    for (std::size_t a = 0; a < first.size(); ++a) out[ap] += first[a] * gamma.at(ap, a);
  return out;
}

/// D = sum_a' |p(a'|A1) - p(a'|A0 -> A1)|.
inline double disturbance(const OutcomeDistribution& second_direct,
                          const OutcomeDistribution& first, const TransferMatrix& gamma) {
  const auto disturbed = disturbed_statistics(first, gamma);
  if (disturbed.size() != second_direct.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "transfer matrix has " + std::to_string(gamma.outcomes()) +
                    " rows, second measurement has " + std::to_string(second_direct.size()) +
                    " outcomes");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < disturbed.size(); ++i) total += std::abs(second_direct[i] - disturbed[i]);
  return total;
}

inline bool ndwu_relation_holds(double delta, double delta_disturbed, double d,
                                double tol = kDefaultTol) {
  return delta * delta_disturbed >= d - tol;
}

/// Two-outcome form: e0^2 + e1^2 + c^2 - 2 c e0 e1 <= 1, with c = 2 gamma[0][0] - 1.
inline bool two_outcome_relation(double e0, double e1, double c, double tol = kDefaultTol) {
  return e0 * e0 + e1 * e1 + c * c - 2.0 * c * e0 * e1 <= 1.0 + tol;
}

/// Values of c allowed by the two-outcome relation in one state.
struct CInterval {
  double lo = -1.0;
  double hi = 1.0;

  bool contains(double c, double tol = 0.0) const { return c >= lo - tol && c <= hi + tol; }
  double width() const { return hi - lo; }
};

inline CInterval c_interval(double e0, double e1) {
  e0 = std::clamp(e0, -1.0, 1.0);
  e1 = std::clamp(e1, -1.0, 1.0);
  const double spread = std::sqrt(1.0 - e0 * e0) * std::sqrt(1.0 - e1 * e1);
  const double center = e0 * e1;
  return {std::max(-1.0, center - spread), std::min(1.0, center + spread)};
}

}  // namespace ndwu
