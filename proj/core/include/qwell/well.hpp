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

#ifndef QWELL_WELL_HPP
#define QWELL_WELL_HPP

#include <span>
#include <vector>

#include "qwell/errors.hpp"

namespace qwell {

/// 1D finite square well, V(x) = -depth for |x| <= width/2 and 0 outside,
/// in dimensionless units (hbar = 1). The depth is stored as a positive
/// magnitude; bound-state energies come out in (-depth, 0).
struct WellSpec {
  double depth = 200.0;
  double width = 1.0;
  double mass = 1.0;

  /// K = sqrt(2 m depth), the wavenumber scale that bounds k^2 + kappa^2.
  double wavenumber_scale() const;

  /// Bound-state count implied by the bracket pi (N - 1) <= K a <= pi N.
  int predicted_bound_states() const;
};

enum class Parity { even, odd };

/// One bound state of the well. Self-contained: carries everything needed
/// to evaluate the normalized wavefunction anywhere on the line.
struct BoundState {
  int n = 0;            // 1-based index, energies increasing
  double energy = 0.0;  // in (-depth, 0)
  Parity parity = Parity::even;
  double k = 0.0;       // inner wavenumber, psi ~ cos(kx) or sin(kx) inside
  double kappa = 0.0;   // outer decay constant, psi ~ exp(-kappa |x|) outside
  double amp_in = 0.0;  // amplitude of the trigonometric part inside
  double amp_edge = 0.0;  // wavefunction value at x = +width/2
  double half_width = 0.0;
};

/// All bound states of the well, energies strictly increasing, parity
/// alternating starting from even. Each state satisfies its branch equation
/// k tan(k a/2) = kappa (even) or -k cot(k a/2) = kappa (odd) together with
/// k^2 + kappa^2 = 2 m depth, and is L2-normalized in closed form.
///
/// Throws NoBoundStates when K a < 1e-2, i.e. when the well is too shallow
/// to resolve its (formally always existing) single bound state numerically.
std::vector<BoundState> solve_bound_states(const WellSpec& spec);

/// Normalized real wavefunction psi_n(x).
double wavefunction(const BoundState& state, double x);

/// Transition dipole matrix d[n][m] = <psi_n| x |psi_m>, 1-based level
/// indices. Symmetric with zero diagonal; exactly zero for same-parity
/// pairs (the integrand is odd).
class DipoleMatrix {
public:
  explicit DipoleMatrix(int levels);

  int levels() const { return n_; }
  double at(int n, int m) const;
  double& at(int n, int m);

private:
  int n_;
  std::vector<double> d_;
};

/// Dipole matrix from closed-form piecewise antiderivatives of the
/// x * trig * trig (inside) and x * exp * exp (tail) integrands.
DipoleMatrix dipole_matrix(std::span<const BoundState> states);

}  // namespace qwell

#endif  // QWELL_WELL_HPP
