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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace zonec {

using cdouble = std::complex<double>;

/// Square complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  DenseMatrix(std::size_t dim, std::initializer_list<cdouble> values);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::initializer_list<cdouble> diag);

  std::size_t dim() const { return dim_; }
  cdouble& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const std::vector<cdouble>& data() const { return data_; }
  std::vector<cdouble>& data() { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator*(cdouble scale) const;

  /// max_ij |A_ij - B_ij|; dimensions must agree.
  double max_abs_diff(const DenseMatrix& other) const;
  /// max_ij |(U U^dagger - I)_ij|.
  double unitarity_error() const;

 private:
  std::size_t dim_ = 0;
  std::vector<cdouble> data_;
};

/// True iff some alpha has max|U - e^{i alpha} V| <= tol. The phase is taken
/// from the ratio at V's largest-magnitude element.
bool equiv_up_to_global_phase(const DenseMatrix& u, const DenseMatrix& v, double tol);

/// Same relation for state vectors.
bool equiv_up_to_global_phase(const std::vector<cdouble>& u, const std::vector<cdouble>& v,
                              double tol);

}  // namespace zonec
