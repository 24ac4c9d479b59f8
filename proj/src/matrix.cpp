// Copyright 2026 The zonec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zonec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zonec {

DenseMatrix::DenseMatrix(std::size_t dim, std::initializer_list<cdouble> values)
    : dim_(dim), data_(values) {
  if (data_.size() != dim * dim) throw std::invalid_argument("DenseMatrix: wrong element count");
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::initializer_list<cdouble> diag) {
  DenseMatrix m(diag.size());
  std::size_t i = 0;
  for (cdouble d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      cdouble a = (*this)(r, k);
      if (a == cdouble{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator*(cdouble scale) const {
  DenseMatrix out = *this;
  for (auto& v : out.data_) v *= scale;
  return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

double DenseMatrix::unitarity_error() const {
  return ((*this) * adjoint()).max_abs_diff(identity(dim_));
}

namespace {

bool phase_equiv(const std::vector<cdouble>& u, const std::vector<cdouble>& v, double tol) {
  if (u.size() != v.size()) throw std::invalid_argument("equiv_up_to_global_phase: dimension mismatch");
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  if (v.empty()) return true;
  if (best == 0.0) {
    return std::all_of(u.begin(), u.end(), [tol](cdouble x) { return std::abs(x) <= tol; });
  }
  cdouble ratio = u[pivot] / v[pivot];
  double mag = std::abs(ratio);
  cdouble phase = mag > 0.0 ? ratio / mag : cdouble{1.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i] - phase * v[i]) > tol) return false;
  }
  return true;
}

}  // namespace

bool equiv_up_to_global_phase(const DenseMatrix& u, const DenseMatrix& v, double tol) {
  if (u.dim() != v.dim()) throw std::invalid_argument("equiv_up_to_global_phase: dimension mismatch");
  return phase_equiv(u.data(), v.data(), tol);
}

bool equiv_up_to_global_phase(const std::vector<cdouble>& u, const std::vector<cdouble>& v,
                              double tol) {
  return phase_equiv(u, v, tol);
}

}  // namespace zonec
