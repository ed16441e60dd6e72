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

#include "qwell/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwell {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()) + " differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
  if (dim < 1) throw DimensionMismatch("ComplexMatrix: dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  ComplexMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionMismatch("from_rows: row " + std::to_string(r) + " has wrong length");
    }
    int c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : a_) v *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "matmul");
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex l = lhs(r, k);
      if (l == Complex{}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += l * rhs(k, c);
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw DimensionMismatch("apply: vector length " + std::to_string(v.size()) +
                            " does not match dimension " + std::to_string(dim_));
  }
  std::vector<Complex> out(static_cast<size_t>(dim_));
  for (int r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double d = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
  return d;
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

bool is_unitary(const ComplexMatrix& m, double tol) {
  return max_abs_diff(m * m.dagger(), ComplexMatrix::identity(m.dim())) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ra = 0; ra < na; ++ra)
    for (int ca = 0; ca < na; ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex{}) continue;
      for (int rb = 0; rb < nb; ++rb)
        for (int cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
    }
  return out;
}

}  // namespace qwell
