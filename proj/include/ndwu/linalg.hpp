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

// Small dense complex matrices (d <= 8 in practice). Row-major storage.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "ndwu/error.hpp"

namespace ndwu {

using cplx = std::complex<double>;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static CMatrix identity(std::size_t d) {
    CMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<cplx> column(std::size_t j) const {
    std::vector<cplx> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  CMatrix adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    CMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const cplx a = lhs(i, k);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    }
    for (std::size_t i = 0; i < lhs.data_.size(); ++i) lhs.data_[i] += rhs.data_[i];
    return lhs;
  }

  friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// <u|v>, conjugate-linear in the first argument.
inline cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

/// <v|M|v>.
inline cplx quadratic_form(const CMatrix& m, const std::vector<cplx>& v) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
    s += std::conj(v[i]) * row;
  }
  return s;
}

inline double max_hermitian_defect(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

/// Symmetrically pivoted Cholesky on a Hermitian matrix. Returns the smallest
/// pivot met; a value below -tol means the matrix is not positive
/// semidefinite. Once the largest remaining diagonal is within tol of zero,
/// the trailing block must vanish (|entry| <= tol), otherwise the matrix is
/// indefinite and -infinity is returned.
inline double min_pivot(CMatrix m, double tol) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  double smallest = n ? m(0, 0).real() : 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (m(order[i], order[i]).real() > m(order[piv], order[piv]).real()) piv = i;
    std::swap(order[k], order[piv]);
    const std::size_t pk = order[k];
    const double pivot = m(pk, pk).real();
    smallest = k == 0 ? pivot : std::min(smallest, pivot);
    if (pivot < -tol) return pivot;
    if (pivot <= tol) {
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (i != j && std::abs(m(order[i], order[j])) > tol) return -std::numeric_limits<double>::infinity();
      return smallest;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::size_t oi = order[i], oj = order[j];
        m(oi, oj) -= m(oi, pk) * m(pk, oj) / pivot;
      }
  }
  return smallest;
}

}  // namespace ndwu
