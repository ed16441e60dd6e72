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

#ifndef QWELL_THERMAL_HPP
#define QWELL_THERMAL_HPP

#include <array>
#include <span>
#include <vector>

#include "qwell/complex_matrix.hpp"

namespace qwell {

/// Thermal state parameters: the seven bound-state energies (strictly
/// increasing) and a dimensionless temperature (k_B = 1).
struct GibbsSpec {
  std::array<double, 7> energies{};
  double temperature = 1.0;
};

/// Gibbs state exp(-H/T)/Z as a 7x7 matrix, diagonal in the energy
/// eigenbasis. Weights are evaluated relative to the ground state so deep
/// wells at low temperature cannot overflow; the trace is exactly one after
/// normalization and the populations decrease strictly with level.
ComplexMatrix gibbs_state(const GibbsSpec& spec);

/// One temperature point of the information sweep: the three pairwise
/// mutual informations and three conditional mutual informations (bits)
/// of the virtual qubits under the three-qubit encoding.
struct SweepRecord {
  double T = 0.0;
  double I_AB = 0.0;
  double I_AC = 0.0;
  double I_BC = 0.0;
  double I_AB_given_C = 0.0;
  double I_AC_given_B = 0.0;
  double I_BC_given_A = 0.0;
};

/// Evaluate all six information quantities of the Gibbs state at every
/// temperature of the grid (positive, ascending). Deterministic: identical
/// inputs give bitwise identical records.
std::vector<SweepRecord> information_sweep(std::span<const double> energies,
                                           std::span<const double> temperature_grid);

/// Default sweep grid: 200 points, linear from T = 0.1 to T = 50.
std::vector<double> default_temperature_grid();

/// Population that a hypothetical continuum-edge level at E = 0 would
/// acquire in the Gibbs state, exp(0/T) / (Z + exp(0/T)). A proxy for how
/// much the truncation to bound states leaks at temperature T; the command
/// line warns when it exceeds one percent.
double continuum_occupation_estimate(std::span<const double> energies, double temperature);

}  // namespace qwell

#endif  // QWELL_THERMAL_HPP
