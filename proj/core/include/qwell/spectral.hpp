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

#ifndef QWELL_SPECTRAL_HPP
#define QWELL_SPECTRAL_HPP

#include <span>
#include <vector>

#include "qwell/complex_matrix.hpp"

namespace qwell {

/// Eigendecomposition of a Hermitian matrix: V diag(lambda) V^dagger
/// reconstructs the input. Eigenvalues are sorted descending and the
/// eigenvector columns are orthonormal.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Hermitian eigensolver (cyclic Jacobi with complex Givens rotations).
///
/// The input must be Hermitian within 1e-10 (max-abs of m - m^dagger),
/// otherwise NotHermitian is thrown. Rotations sweep until the off-diagonal
/// Frobenius norm drops below 1e-14 (at most 100 sweeps), which for the
/// dimensions used here reconstructs the input to better than 1e-12.
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Von Neumann entropy -Tr[sigma log2 sigma] in bits, with 0 log 0 = 0.
///
/// sigma must be a density matrix: Hermitian, trace within 1e-9 of one, and
/// eigenvalues >= -1e-10. Eigenvalues in (-1e-10, 0) are treated as
/// round-off and clipped to zero; anything more negative throws
/// NotDensityMatrix rather than being silently clipped.
double von_neumann_entropy(const ComplexMatrix& sigma);

/// Reduced matrix over the kept tensor factors.
///
/// The matrix is interpreted as acting on a tensor product with the given
/// factor dimensions, factor 0 being the slowest-varying (leftmost) index.
/// `kept` lists the factor indices to keep, strictly increasing; an empty
/// list reduces to the 1x1 matrix holding the trace. The trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> factor_dims,
                            std::span<const int> kept);

/// True when m is Hermitian (within herm_tol), has unit trace (within
/// trace_tol) and eigenvalues >= -eig_tol.
bool is_density_matrix(const ComplexMatrix& m, double trace_tol = 1e-9, double eig_tol = 1e-10);

/// Throws NotDensityMatrix (or NotHermitian) with a descriptive message when
/// the checks of is_density_matrix fail. `who` names the operation.
void require_density_matrix(const ComplexMatrix& m, const char* who, double trace_tol = 1e-9,
                            double eig_tol = 1e-10);

}  // namespace qwell

#endif  // QWELL_SPECTRAL_HPP
