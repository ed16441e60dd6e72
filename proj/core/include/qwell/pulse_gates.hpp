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

#ifndef QWELL_PULSE_GATES_HPP
#define QWELL_PULSE_GATES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwell/complex_matrix.hpp"
#include "qwell/well.hpp"

namespace qwell {

// Gate- and pulse-level simulation of the qubit-qutrit parity-check
// algorithm on the seven-level system. Level indices are 1-based
// throughout, matching the energy-level numbering of the well.

/// Pure state of the seven-level system.
struct QuditState {
  std::array<Complex, 7> amp{};  // amp[i] multiplies level i+1

  static QuditState basis(int level);  // throws BadLevels outside 1..7
  double population(int level) const;
  double norm() const;
};

/// u * state; u must be 7x7.
QuditState apply(const ComplexMatrix& u, const QuditState& state);

/// Classical six-bit string queried by the oracle.
class BitString6 {
public:
  BitString6() = default;

  /// Parse exactly six characters of '0'/'1'; throws std::invalid_argument.
  static BitString6 parse(std::string_view text);
  /// Bits of a 6-bit integer, s1 taken from the least significant bit.
  static BitString6 from_index(unsigned value);

  int bit(int i) const;  // s_i, 1-based
  int parity() const;    // s1 xor ... xor s6
  std::string str() const;

private:
  std::array<std::uint8_t, 6> bits_{};
};

/// Rotation about Y on the two-level subspace spanned by levels n < m:
/// cos(theta/2) on the diagonal of the block, -sin / +sin off it, identity
/// elsewhere. Defined for any level pair; physical pulses restrict to
/// adjacent levels.
ComplexMatrix rotation(int n, int m, double theta);

/// One resonant pulse addressing the n <-> n+1 transition. The rotation
/// angle fixes the duration once the dipole moment and reference field
/// amplitude are known; the field phase is 3 pi / 2.
struct Pulse {
  int n = 1;
  int m = 2;
  double theta = 0.0;

  Pulse() = default;
  Pulse(int n_, double theta_);  // m = n + 1; throws BadLevels
};

/// Pulse duration theta / (2 E0 d_nm); negative when the dipole moment is
/// negative (equivalent to shifting the field phase by pi).
/// Throws ZeroDipole when |d_nm| < 1e-12.
double pulse_duration(const Pulse& pulse, const DipoleMatrix& dipole, double field_amplitude = 1.0);

/// Ordered pulse sequence realizing a named gate; pulses listed in
/// application (time) order.
struct PulseSchedule {
  std::string label;
  std::vector<Pulse> pulses;
};

/// Evolve a state through one pulse via the closed-form matrix exponential
/// of the resonant interaction Hamiltonian. Independent of rotation(); the
/// two agree to better than 1e-12.
QuditState evolve_pulse(const QuditState& state, const Pulse& pulse, const DipoleMatrix& dipole,
                        double field_amplitude = 1.0);

QuditState evolve_schedule(const QuditState& state, const PulseSchedule& schedule,
                           const DipoleMatrix& dipole, double field_amplitude = 1.0);

/// Composite unitary of a schedule (product of its rotations, first pulse
/// rightmost).
ComplexMatrix schedule_unitary(const PulseSchedule& schedule);

/// A library gate: explicit matrix, the pulse schedule that realizes it,
/// and the recorded global sign relating the two (schedule product equals
/// global_phase times matrix, within 1e-10).
struct Gate {
  std::string name;
  ComplexMatrix matrix{7};
  PulseSchedule schedule;
  int global_phase = 1;
};

/// The gate set of the parity-check algorithm. hadamard acts on the virtual
/// qubit (2x2 Hadamard blocks on level pairs (1,2), (3,4), (5,6) and -1 on
/// level 7); swap01/swap12 permute qutrit states (levels 1<->3, 2<->4 and
/// 3<->5, 4<->6); z[n-1] flips the sign of levels n and 7. sigma_z is the
/// readout observable diag(+1,-1,+1,-1,+1,-1,0), with an empty schedule.
struct GateLibrary {
  Gate hadamard;
  Gate swap01;
  Gate swap12;
  std::array<Gate, 6> z;
  Gate sigma_z;
};

GateLibrary gate_library();

/// Oracle O_s: diagonal signs (-1)^{s_n} on levels 1..6 and (-1)^{s_1+...+s_6}
/// on level 7. Identical, entry for entry, to the product of Z_n^{s_n}.
ComplexMatrix parity_oracle(const BitString6& s);

/// Pulse realization of the oracle: the concatenated Z_n schedules of the
/// set bits.
PulseSchedule oracle_schedule(const BitString6& s);

/// Result of one parity-check run. The final state is +-|level 5> for even
/// strings and +-|level 6> for odd ones, the sign being the global phase
/// (-1)^{s1+s3+s5}; the oracle is queried three times.
struct ParityRun {
  int outcome = 0;
  QuditState final_state;
  int global_phase = 1;
  int oracle_queries = 0;
};

/// Gate-level run: applies H, O_s, U01, O_s, U12, O_s, H to |level 1>.
ParityRun run_parity_algorithm(const BitString6& s);

/// Pulse-level run: the same circuit with every gate replaced by its pulse
/// schedule, evolved through the closed-form pulse propagator.
ParityRun run_parity_algorithm(const BitString6& s, const DipoleMatrix& dipole,
                               double field_amplitude = 1.0);

/// Expectation of the qubit readout observable. Throws AncillaOccupied when
/// the level-7 population exceeds 1e-9.
double measure_parity_observable(const QuditState& state);

/// Probability density at the center of the trap, |sum_n c_n psi_n(0)|^2.
/// Zero for states supported on odd-parity levels only.
double position_density_readout(const QuditState& state, std::span<const BoundState> states);

}  // namespace qwell

#endif  // QWELL_PULSE_GATES_HPP
