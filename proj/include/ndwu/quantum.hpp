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

// Finite-dimensional quantum oracle. Sharp measurements are orthonormal
// bases; every probability is a quadratic form <v|rho|v> or an overlap
// |<u|v>|^2, so no eigendecomposition is needed anywhere.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ndwu/behavior.hpp"
#include "ndwu/error.hpp"
#include "ndwu/format.hpp"
#include "ndwu/linalg.hpp"
#include "ndwu/measures.hpp"
#include "ndwu/random.hpp"

namespace ndwu::quantum {

inline constexpr double kStateTol = 1e-12;
inline constexpr std::size_t kMaxDim = 8;

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positive semidefiniteness, all
  /// within `tol`.
  static DensityMatrix from_matrix(CMatrix m, double tol = kStateTol) {
    if (!m.square() || m.rows() < 2) {
      throw Error(ErrorKind::InvalidState, "density matrix must be square with d >= 2");
    }
    if (const double defect = max_hermitian_defect(m); defect > tol) {
      throw Error(ErrorKind::InvalidState, "not Hermitian, defect " + format_double(defect));
    }
    if (const cplx tr = m.trace(); std::abs(tr - 1.0) > tol) {
      throw Error(ErrorKind::InvalidState, "trace " + format_double(tr.real()));
    }
    if (const double pivot = min_pivot(m, tol); pivot < -tol) {
      throw Error(ErrorKind::InvalidState, "not positive semidefinite, pivot " + format_double(pivot));
    }
    return DensityMatrix(std::move(m));
  }

  /// |psi><psi| for a (not necessarily normalized) vector.
  static DensityMatrix pure(const std::vector<cplx>& psi) {
    const double norm2 = inner(psi, psi).real();
    if (!(norm2 > 0.0)) throw Error(ErrorKind::InvalidState, "zero state vector");
    CMatrix m(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
      for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]) / norm2;
    return from_matrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(std::size_t d) {
    CMatrix m = CMatrix::identity(d);
    m *= 1.0 / static_cast<double>(d);
    return from_matrix(std::move(m));
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }

 private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Orthonormal basis stored as matrix columns; column k is the vector for
/// outcome k.
class SharpBasis {
 public:
  static SharpBasis from_columns(CMatrix columns, double tol = kStateTol) {
    if (!columns.square() || columns.rows() < 2) {
      throw Error(ErrorKind::InvalidBasis, "basis must be d vectors of length d, d >= 2");
    }
    const CMatrix gram = columns.adjoint() * columns;
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        if (std::abs(gram(i, j) - expected) > tol) {
          throw Error(ErrorKind::InvalidBasis, "Gram entry (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") off by " +
                                                   format_double(std::abs(gram(i, j) - expected)));
        }
      }
    return SharpBasis(std::move(columns));
  }

  static SharpBasis computational(std::size_t d) { return from_columns(CMatrix::identity(d)); }

  std::size_t dim() const noexcept { return v_.rows(); }
  std::vector<cplx> vector(std::size_t k) const { return v_.column(k); }
  const CMatrix& columns() const noexcept { return v_; }

  /// Same vectors, outcome labels permuted: new outcome k is old outcome perm[k].
  SharpBasis relabeled(const std::vector<std::size_t>& perm) const {
    CMatrix out(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t i = 0; i < dim(); ++i) out(i, k) = v_(i, perm.at(k));
    return from_columns(std::move(out));
  }

 private:
  explicit SharpBasis(CMatrix v) : v_(std::move(v)) {}
  CMatrix v_;
};

/// Qubit observable n.sigma; outcome a has projector (I + (-1)^a n.sigma) / 2.
class BlochObservable {
 public:
  explicit BlochObservable(const std::array<double, 3>& n) : n_(n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(norm - 1.0) > kStateTol) {
      throw Error(ErrorKind::InvalidObservable, "Bloch vector norm " + format_double(norm));
    }
  }

  /// Normalizes first; for directions written as sums like (z + x).
  static BlochObservable along(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0.0)) throw Error(ErrorKind::InvalidObservable, "zero Bloch vector");
    return BlochObservable({x / norm, y / norm, z / norm});
  }

  const std::array<double, 3>& direction() const noexcept { return n_; }

  CMatrix projector(int outcome) const {
    const double s = sign_of(outcome);
    const auto& [x, y, z] = n_;
    return CMatrix{{0.5 * (1.0 + s * z), 0.5 * s * cplx(x, -y)},
                   {0.5 * s * cplx(x, y), 0.5 * (1.0 - s * z)}};
  }

  /// Eigenbasis; vector 0 has eigenvalue +1 (outcome 0).
  SharpBasis basis() const {
    const auto& [x, y, z] = n_;
    cplx p, q;
    if (z >= 0.0) {
      const double norm = std::sqrt(2.0 * (1.0 + z));
      p = (1.0 + z) / norm;
      q = cplx(x, y) / norm;
    } else {
      const double norm = std::sqrt(2.0 * (1.0 - z));
      p = cplx(x, -y) / norm;
      q = (1.0 - z) / norm;
    }
    return SharpBasis::from_columns(CMatrix{{p, -std::conj(q)}, {q, std::conj(p)}});
  }

 private:
  std::array<double, 3> n_;
};

inline BlochObservable pauli_x() { return BlochObservable({1.0, 0.0, 0.0}); }
inline BlochObservable pauli_y() { return BlochObservable({0.0, 1.0, 0.0}); }
inline BlochObservable pauli_z() { return BlochObservable({0.0, 0.0, 1.0}); }

/// (|01> - |10>) / sqrt(2).
inline DensityMatrix singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure({0.0, r, -r, 0.0});
}

/// |+> = (|0> + |1>) / sqrt(2).
inline DensityMatrix plus_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure({r, r});
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(a) +
                                                  " vs " + std::to_string(b));
  }
}

/// p(a) = <v_a|rho|v_a>.
inline OutcomeDistribution outcome_probs(const DensityMatrix& rho, const SharpBasis& basis) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  std::vector<double> probs(basis.dim());
  for (std::size_t a = 0; a < basis.dim(); ++a)
    probs[a] = quadratic_form(rho.matrix(), basis.vector(a)).real();
  return OutcomeDistribution(std::move(probs));
}

/// gamma[a'][a] = |<second_a'|first_a>|^2: outcome a' of `second` on the
/// state left by outcome a of `first`.
inline TransferMatrix transfer_matrix(const SharpBasis& first, const SharpBasis& second) {
  require_same_dim(first.dim(), second.dim(), "basis pair");
  const std::size_t d = first.dim();
  std::vector<std::vector<double>> gamma(d, std::vector<double>(d));
  for (std::size_t ap = 0; ap < d; ++ap) {
    const auto s = second.vector(ap);
    for (std::size_t a = 0; a < d; ++a) gamma[ap][a] = std::norm(inner(s, first.vector(a)));
  }
  return TransferMatrix(std::move(gamma));
}

/// Statistics of `second` measured after `first` on rho.
inline OutcomeDistribution sequential_stats(const DensityMatrix& rho, const SharpBasis& first,
                                            const SharpBasis& second) {
  return OutcomeDistribution(
      disturbed_statistics(outcome_probs(rho, first), transfer_matrix(first, second)));
}

struct RelationRecord {
  double uncertainty = 0.0;            // Delta_{A0}
  double disturbed_uncertainty = 0.0;  // Delta_{A0|A1}
  double lhs = 0.0;                    // product of the two
  double rhs = 0.0;                    // D_{A0 -> A1}
  bool holds = false;

  double slack() const { return lhs - rhs; }
};

inline constexpr double kRelationTol = 1e-9;

/// Uncertainty-disturbance relation for measuring `first` then `second` on rho.
inline RelationRecord verify_theorem1(const DensityMatrix& rho, const SharpBasis& first,
                                      const SharpBasis& second) {
  require_same_dim(rho.dim(), first.dim(), "state vs first basis");
  require_same_dim(first.dim(), second.dim(), "basis pair");
  const auto p_first = outcome_probs(rho, first);
  const auto p_second = outcome_probs(rho, second);
  RelationRecord r;
  r.uncertainty = uncertainty(p_first);
  r.disturbed_uncertainty = ndwu::disturbed_uncertainty(transfer_matrix(second, first));
  r.lhs = r.uncertainty * r.disturbed_uncertainty;
  r.rhs = disturbance(p_second, p_first, transfer_matrix(first, second));
  r.holds = ndwu_relation_holds(r.uncertainty, r.disturbed_uncertainty, r.rhs, kRelationTol);
  return r;
}

/// Largest |gamma_{second<-first}[a'][a] - gamma_{first<-second}[a][a']|.
inline double transfer_asymmetry(const SharpBasis& first, const SharpBasis& second) {
  const auto forward = transfer_matrix(first, second);
  const auto backward = transfer_matrix(second, first);
  double worst = 0.0;
  for (std::size_t ap = 0; ap < forward.outcomes(); ++ap)
    for (std::size_t a = 0; a < forward.preparations(); ++a)
      worst = std::max(worst, std::abs(forward.at(ap, a) - backward.at(a, ap)));
  return worst;
}

inline bool verify_transfer_symmetry(const SharpBasis& first, const SharpBasis& second) {
  return transfer_asymmetry(first, second) <= kStateTol;
}

// --- seeded ensembles --------------------------------------------------------

inline void require_valid_dim(std::size_t d) {
  if (d < 2 || d > kMaxDim) {
    throw Error(ErrorKind::InvalidDimension,
                "dimension " + std::to_string(d) + " outside [2," + std::to_string(kMaxDim) + "]");
  }
}

/// rows x cols table of independent standard complex Gaussians.
inline CMatrix ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

/// G G^dagger / tr(G G^dagger) with G a d x rank Ginibre table; rank = d by
/// default, rank = 1 gives a pure state.
inline DensityMatrix random_state(std::size_t d, std::uint64_t seed, std::size_t rank = 0) {
  require_valid_dim(d);
  if (rank == 0) rank = d;
  const CMatrix g = ginibre(d, rank, seed);
  CMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // symmetrize away rounding so the Hermiticity check is exact
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) m(j, i) = std::conj(m(i, j));
  }
  return DensityMatrix::from_matrix(std::move(m));
}

/// Gram-Schmidt on a Ginibre table, with a second orthogonalization pass.
inline SharpBasis random_basis(std::size_t d, std::uint64_t seed) {
  require_valid_dim(d);
  CMatrix g = ginibre(d, d, seed);
  std::vector<std::vector<cplx>> cols;
  for (std::size_t j = 0; j < d; ++j) {
    auto v = g.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : cols) {
        const cplx proj = inner(u, v);
        for (std::size_t i = 0; i < d; ++i) v[i] -= proj * u[i];
      }
    const double norm = std::sqrt(inner(v, v).real());
    for (auto& x : v) x /= norm;
    cols.push_back(std::move(v));
  }
  CMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) out(i, j) = cols[j][i];
  return SharpBasis::from_columns(std::move(out));
}

/// Isotropic unit vector (normalized Gaussian triple).
inline BlochObservable random_bloch(std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    if (x * x + y * y + z * z > 1e-12) return BlochObservable::along(x, y, z);
  }
}

// --- two-qubit behaviors -------------------------------------------------------

/// p(ab|nu mu) = Tr(rho M_{A_nu}^a (x) M_{B_mu}^b), Alice on the first factor.
inline Behavior two_qubit_behavior(const DensityMatrix& rho4, const BlochObservable& a0,
                                   const BlochObservable& a1, const BlochObservable& b0,
                                   const BlochObservable& b1, double tol = kDefaultTol) {
  require_same_dim(rho4.dim(), 4, "two-qubit state");
  const std::array<const BlochObservable*, 2> alice{&a0, &a1};
  const std::array<const BlochObservable*, 2> bob{&b0, &b1};
  RawTable table{};
  for (int nu = 0; nu < 2; ++nu)
    for (int mu = 0; mu < 2; ++mu)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const CMatrix effect = kron(alice[nu]->projector(a), bob[mu]->projector(b));
          table[table_index(nu, mu, a, b)] = (rho4.matrix() * effect).trace().real();
        }
  return Behavior::validate(table, tol);
}

}  // namespace ndwu::quantum
