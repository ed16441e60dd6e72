// Copyright 2026 The qwell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWELL_COMPLEX_MATRIX_HPP
#define QWELL_COMPLEX_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "qwell/errors.hpp"

namespace qwell {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The universal carrier for density
/// matrices, Hamiltonians and unitaries in this project; dimensions stay
/// small (<= 8) so no effort is spent on blocking or sparsity.
class ComplexMatrix {
public:
  /// Zero matrix of dimension `dim` (dim >= 1).
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> entries);
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  /// Build from row lists; every row must have the same length as the row count.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  /// Conjugate transpose.
  ComplexMatrix dagger() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

  /// Matrix product; throws DimensionMismatch if dimensions differ.
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  /// Matrix-vector product; throws DimensionMismatch if v.size() != dim.
  std::vector<Complex> apply(std::span<const Complex> v) const;

  std::span<const Complex> data() const { return a_; }

private:
  int dim_;
  std::vector<Complex> a_;
};

/// Max entrywise modulus of a - b; throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max entrywise modulus of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-12);

/// Kronecker (tensor) product, factor `a` slowest-varying.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qwell

#endif  // QWELL_COMPLEX_MATRIX_HPP
