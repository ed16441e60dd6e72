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

#ifndef QWELL_ENCODINGS_HPP
#define QWELL_ENCODINGS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qwell/complex_matrix.hpp"

namespace qwell {

// Virtual-subsystem encodings of the seven-level system.
//
// Three-qubit scheme: level n (1..7) maps to the 3-bit string of n-1 read as
// |A B C> with A the slowest (leftmost) factor; the eighth label |111> is an
// unoccupied pad. Qubit-qutrit scheme: levels 1..6 map to |m k> with qutrit
// m = (n-1)/2 and qubit k = (n-1)%2; level 7 is an ancilla that must stay
// unoccupied.

/// Declared factorization of the 7-level space into virtual subsystems.
struct EncodingMap {
  std::string name;                      // "three_qubit" or "qubit_qutrit"
  int source_dim = 7;
  std::vector<int> target_factor_dims;   // {2,2,2} or {3,2}
  std::vector<std::string> level_labels; // basis label of each level 1..7
  std::vector<std::string> padding_labels;
};

EncodingMap three_qubit_encoding();
EncodingMap qubit_qutrit_encoding();

/// Labels for the virtual qubits and their pairs in the three-qubit scheme.
enum class Subsystem { A, B, C, AB, AC, BC };

const char* to_string(Subsystem s);

/// Extend a 7x7 density matrix to the 8x8 three-qubit carrier: original
/// block plus a zero eighth row and column. Trace is preserved exactly.
ComplexMatrix embed_7_to_8(const ComplexMatrix& rho7);

/// Reduced density matrix of the requested virtual subsystem(s), computed by
/// the generic partial trace of the embedded 8x8 state over factor
/// dimensions (2,2,2). This is the production path.
ComplexMatrix reduced_state(const ComplexMatrix& rho7, Subsystem which);

/// Same reductions written out entrywise from the 7x7 matrix elements.
/// Kept as an independent implementation; tests cross-check it against
/// reduced_state.
ComplexMatrix reduced_state_closed_form(const ComplexMatrix& rho7, Subsystem which);

/// I_XY = S[rho_X] + S[rho_Y] - S[rho_XY] in bits; `pair` must be one of
/// AB, AC, BC. Nonnegative up to round-off (subadditivity).
double mutual_information(const ComplexMatrix& rho7, Subsystem pair);

/// I_XY|Z = S[rho_XZ] + S[rho_YZ] - S[rho_Z] - S[rho_XYZ] in bits; `pair`
/// is one of AB, AC, BC and `given` the remaining single subsystem.
/// Nonnegative up to round-off (strong subadditivity).
double conditional_mutual_information(const ComplexMatrix& rho7, Subsystem pair,
                                      Subsystem given);

/// Reduced qutrit (3x3) and qubit (2x2) states of the qubit-qutrit scheme,
/// renormalized to unit trace. Throws AncillaOccupied when the level-7
/// population exceeds 1e-9: the encoding is only defined on the
/// six-dimensional subspace, and occupation signals a bug upstream.
std::pair<ComplexMatrix, ComplexMatrix> qutrit_qubit_split(const ComplexMatrix& rho7);

}  // namespace qwell

#endif  // QWELL_ENCODINGS_HPP
