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

#include "qwell/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qwell {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kOffNormThreshold = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kEigClip = 1e-10;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// One complex Jacobi rotation eliminating a(p,q). The 2x2 block is first
// dephased to a real symmetric problem, then rotated with the stable
// tangent formula. a stays exactly Hermitian; v accumulates V <- V U.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i theta}
  const Complex cph = std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  // Column pass: A <- A U with U(p,p)=c, U(p,q)=s, U(q,p)=-s cph, U(q,q)=c cph.
  for (int i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip - s * cph * aiq;
    a(i, q) = s * aip + c * cph * aiq;
  }
  // Row pass: A <- U^dagger A.
  for (int j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj - s * phase * aqj;
    a(q, j) = s * apj + c * phase * aqj;
  }
  // The rotation annihilates (p,q) by construction; pin it and keep the
  // diagonal exactly real so round-off cannot accumulate asymmetry.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (int i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip - s * cph * viq;
    v(i, q) = s * vip + c * cph * viq;
  }
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermTol) {
    throw NotHermitian("eig_hermitian: input deviates from Hermitian by " +
                       std::to_string(defect));
  }
  const int n = m.dim();

  // Work on the Hermitian average so the iteration sees an exactly
  // Hermitian matrix even when the input carries round-off asymmetry.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r) {
    a(r, r) = m(r, r).real();
    for (int c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffNormThreshold) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum out{std::vector<double>(static_cast<size_t>(n)), ComplexMatrix(n)};
  for (int c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
  }
  return out;
}

double von_neumann_entropy(const ComplexMatrix& sigma) {
  const double tr_err = std::abs(sigma.trace() - Complex{1.0, 0.0});
  if (tr_err > 1e-9) {
    throw NotDensityMatrix("von_neumann_entropy: trace deviates from one by " +
                           std::to_string(tr_err));
  }
  const Spectrum spec = eig_hermitian(sigma);
  double bits = 0.0;
  for (double lambda : spec.eigenvalues) {
    if (lambda < -kEigClip) {
      throw NotDensityMatrix("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                             " below the -1e-10 clipping window");
    }
    if (lambda > 0.0) bits -= lambda * std::log2(lambda);
  }
  return bits;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> factor_dims,
                            std::span<const int> kept) {
  const int f = static_cast<int>(factor_dims.size());
  long total = 1;
  for (int d : factor_dims) {
    if (d < 1) throw DimensionMismatch("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (total != m.dim()) {
    throw DimensionMismatch("partial_trace: factor dimensions multiply to " +
                            std::to_string(total) + ", matrix dimension is " +
                            std::to_string(m.dim()));
  }
  for (size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] >= f || (i > 0 && kept[i] <= kept[i - 1])) {
      throw DimensionMismatch("partial_trace: kept factors must be strictly increasing indices");
    }
  }

  // Strides with factor 0 slowest-varying.
  std::vector<long> stride(static_cast<size_t>(f));
  long acc = 1;
  for (int i = f - 1; i >= 0; --i) {
    stride[static_cast<size_t>(i)] = acc;
    acc *= factor_dims[static_cast<size_t>(i)];
  }

  std::vector<int> traced;
  for (int i = 0; i < f; ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) traced.push_back(i);

  long out_dim = 1;
  for (int i : kept) out_dim *= factor_dims[static_cast<size_t>(i)];
  long traced_count = 1;
  for (int i : traced) traced_count *= factor_dims[static_cast<size_t>(i)];

  // Base offset of an output index within the full index space.
  auto offset = [&](long composite, const std::vector<int>& factors) {
    long off = 0;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const long d = factor_dims[static_cast<size_t>(*it)];
      off += (composite % d) * stride[static_cast<size_t>(*it)];
      composite /= d;
    }
    return off;
  };

  std::vector<int> kept_vec(kept.begin(), kept.end());
  ComplexMatrix out(static_cast<int>(out_dim));
  for (long r = 0; r < out_dim; ++r) {
    const long row_base = offset(r, kept_vec);
    for (long c = 0; c < out_dim; ++c) {
      const long col_base = offset(c, kept_vec);
      Complex sum = 0.0;
      for (long t = 0; t < traced_count; ++t) {
        const long tr_off = offset(t, traced);
        sum += m(static_cast<int>(row_base + tr_off), static_cast<int>(col_base + tr_off));
      }
      out(static_cast<int>(r), static_cast<int>(c)) = sum;
    }
  }
  return out;
}

bool is_density_matrix(const ComplexMatrix& m, double trace_tol, double eig_tol) {
  if (!is_hermitian(m, kHermTol)) return false;
  if (std::abs(m.trace() - Complex{1.0, 0.0}) > trace_tol) return false;
  const Spectrum spec = eig_hermitian(m);
  for (double lambda : spec.eigenvalues)
    if (lambda < -eig_tol) return false;
  return true;
}

void require_density_matrix(const ComplexMatrix& m, const char* who, double trace_tol,
                            double eig_tol) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermTol) {
    throw NotDensityMatrix(std::string(who) + ": not Hermitian (defect " +
                           std::to_string(defect) + ")");
  }
  const double tr_err = std::abs(m.trace() - Complex{1.0, 0.0});
  if (tr_err > trace_tol) {
    throw NotDensityMatrix(std::string(who) + ": trace deviates from one by " +
                           std::to_string(tr_err));
  }
  const Spectrum spec = eig_hermitian(m);
  for (double lambda : spec.eigenvalues) {
    if (lambda < -eig_tol) {
      throw NotDensityMatrix(std::string(who) + ": negative eigenvalue " +
                             std::to_string(lambda));
    }
  }
}

}  // namespace qwell
