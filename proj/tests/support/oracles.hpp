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

// Test-only reference implementations. Everything here is deliberately
// independent of the production code paths it is used to check: the
// finite-difference Hamiltonian is diagonalized by Sturm bisection instead
// of transcendental root-finding, integrals go through adaptive Simpson
// quadrature instead of closed forms, and the three-qubit reductions are
// direct index loops instead of the generic partial trace.

#ifndef QWELL_TESTS_SUPPORT_ORACLES_HPP
#define QWELL_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qwell/complex_matrix.hpp"

namespace qwell::testing {

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature.

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-11, int max_depth = 48) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = detail::simpson(a, b, fa, fm, fb);
  return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Pre-subdivide before adapting: integrands concentrated in a narrow well
// (or oscillating fast inside it) can look identically zero to the three
// initial Simpson samples of the full interval.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11, int panels = 32) {
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    total += adaptive_simpson(f, a + i * h, a + (i + 1) * h, tol / panels);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Lowest eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
// bisection (count of eigenvalues below x via the LDL^T sign recurrence).

inline int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                             double x) {
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (size_t i = 1; i < diag.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

inline std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& diag,
                                                      const std::vector<double>& off, int count) {
  double lo = diag[0], hi = diag[0];
  for (size_t i = 0; i < diag.size(); ++i) {
    const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                          (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double span = hi - lo;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13 * span; ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count_below(diag, off, mid) > k)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-difference oracle for the square-well bound-state energies:
// three-point Laplacian on `points` interior grid points of
// [-3 width, 3 width] with Dirichlet walls. The discontinuous potential is
// represented by its average over each grid cell; plain point sampling
// leaves an O(h) error at the well edges that is far larger than the
// discretization error everywhere else.

inline std::vector<double> fd_well_energies(double depth, double width, double mass, int points,
                                            int count) {
  const double outer = 3.0 * width;
  const double h = 2.0 * outer / (points + 1);
  const double edge = width / 2.0;
  std::vector<double> diag(static_cast<size_t>(points));
  std::vector<double> off(static_cast<size_t>(points - 1), -1.0 / (2.0 * mass * h * h));
  for (int i = 0; i < points; ++i) {
    const double x = -outer + (i + 1) * h;
    const double cell_lo = x - h / 2.0;
    const double cell_hi = x + h / 2.0;
    const double overlap =
        std::max(0.0, std::min(cell_hi, edge) - std::max(cell_lo, -edge));
    diag[static_cast<size_t>(i)] = 1.0 / (mass * h * h) - depth * overlap / h;
  }
  return tridiag_lowest_eigenvalues(diag, off, count);
}

// ---------------------------------------------------------------------------
// Random matrices (deterministic given the generator state).

inline ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = gauss(rng);
    for (int c = r + 1; c < dim; ++c) {
      const Complex v{gauss(rng), gauss(rng)};
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

inline ComplexMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex{gauss(rng), gauss(rng)};
  ComplexMatrix rho = g * g.dagger();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return rho;
}

inline ComplexMatrix random_diagonal_density(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> p(static_cast<size_t>(dim));
  double sum = 0.0;
  for (double& v : p) {
    v = uni(rng) + 1e-3;
    sum += v;
  }
  for (double& v : p) v /= sum;
  return ComplexMatrix::diagonal(std::span<const double>(p));
}

// ---------------------------------------------------------------------------
// Brute-force three-qubit reduction of an 8x8 matrix by explicit bit loops,
// keeping the factors whose flags are set (bit 2 of the level index is
// qubit A, bit 1 qubit B, bit 0 qubit C).

inline ComplexMatrix reduce_brute_force(const ComplexMatrix& rho8, bool keep_a, bool keep_b,
                                        bool keep_c) {
  const bool keep[3] = {keep_a, keep_b, keep_c};
  int out_dim = 1;
  for (bool k : keep) out_dim *= k ? 2 : 1;
  ComplexMatrix out(out_dim);
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      bool diagonal_in_traced = true;
      int r_out = 0, c_out = 0;
      for (int f = 0; f < 3; ++f) {
        const int rb = (row >> (2 - f)) & 1;
        const int cb = (col >> (2 - f)) & 1;
        if (keep[f]) {
          r_out = r_out * 2 + rb;
          c_out = c_out * 2 + cb;
        } else if (rb != cb) {
          diagonal_in_traced = false;
        }
      }
      if (diagonal_in_traced) out(r_out, c_out) += rho8(row, col);
    }
  }
  return out;
}

}  // namespace qwell::testing

#endif  // QWELL_TESTS_SUPPORT_ORACLES_HPP
