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

#include "qwell/pulse_gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroDipoleTol = 1e-12;
constexpr double kGateVsScheduleTol = 1e-10;

void require_levels(int n, int m, const char* who) {
  if (n < 1 || m > 7 || n >= m) {
    throw BadLevels(std::string(who) + ": need 1 <= n < m <= 7, got n=" + std::to_string(n) +
                    " m=" + std::to_string(m));
  }
}

int detect_global_phase(const ComplexMatrix& product, const ComplexMatrix& reference,
                        const char* name) {
  if (max_abs_diff(product, reference) <= kGateVsScheduleTol) return 1;
  ComplexMatrix negated = reference;
  negated *= Complex{-1.0, 0.0};
  if (max_abs_diff(product, negated) <= kGateVsScheduleTol) return -1;
  throw std::logic_error(std::string("gate_library: schedule product for ") + name +
                         " matches neither +1 nor -1 times the explicit matrix");
}

Gate make_gate(std::string name, ComplexMatrix matrix, PulseSchedule schedule) {
  Gate g;
  g.name = std::move(name);
  g.matrix = std::move(matrix);
  g.schedule = std::move(schedule);
  g.global_phase = detect_global_phase(schedule_unitary(g.schedule), g.matrix, g.name.c_str());
  return g;
}

}  // namespace

QuditState QuditState::basis(int level) {
  if (level < 1 || level > 7) {
    throw BadLevels("QuditState::basis: level " + std::to_string(level) + " outside 1..7");
  }
  QuditState s;
  s.amp[static_cast<size_t>(level - 1)] = 1.0;
  return s;
}

double QuditState::population(int level) const {
  if (level < 1 || level > 7) {
    throw BadLevels("QuditState::population: level " + std::to_string(level) + " outside 1..7");
  }
  return std::norm(amp[static_cast<size_t>(level - 1)]);
}

double QuditState::norm() const {
  double n = 0.0;
  for (const Complex& c : amp) n += std::norm(c);
  return std::sqrt(n);
}

QuditState apply(const ComplexMatrix& u, const QuditState& state) {
  if (u.dim() != 7) {
    throw DimensionMismatch("apply: expected a 7x7 operator, got dimension " +
                            std::to_string(u.dim()));
  }
  QuditState out;
  const auto v = u.apply(std::span<const Complex>(state.amp));
  for (size_t i = 0; i < 7; ++i) out.amp[i] = v[i];
  return out;
}

BitString6 BitString6::parse(std::string_view text) {
  if (text.size() != 6) {
    throw std::invalid_argument("BitString6: expected exactly 6 characters, got " +
                                std::to_string(text.size()));
  }
  BitString6 s;
  for (size_t i = 0; i < 6; ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("BitString6: character '" + std::string(1, text[i]) +
                                  "' is not a bit");
    }
    s.bits_[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  return s;
}

BitString6 BitString6::from_index(unsigned value) {
  BitString6 s;
  for (size_t i = 0; i < 6; ++i) s.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1u);
  return s;
}

int BitString6::bit(int i) const {
  if (i < 1 || i > 6) {
    throw std::invalid_argument("BitString6::bit: index " + std::to_string(i) + " outside 1..6");
  }
  return bits_[static_cast<size_t>(i - 1)];
}

int BitString6::parity() const {
  int p = 0;
  for (std::uint8_t b : bits_) p ^= b;
  return p;
}

std::string BitString6::str() const {
  std::string out(6, '0');
  for (size_t i = 0; i < 6; ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

ComplexMatrix rotation(int n, int m, double theta) {
  require_levels(n, m, "rotation");
  ComplexMatrix u = ComplexMatrix::identity(7);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  u(n - 1, n - 1) = c;
  u(n - 1, m - 1) = -s;
  u(m - 1, n - 1) = s;
  u(m - 1, m - 1) = c;
  return u;
}

Pulse::Pulse(int n_, double theta_) : n(n_), m(n_ + 1), theta(theta_) {
  require_levels(n, m, "Pulse");
}

double pulse_duration(const Pulse& pulse, const DipoleMatrix& dipole, double field_amplitude) {
  const double d = dipole.at(pulse.n, pulse.m);
  if (std::abs(d) < kZeroDipoleTol) {
    throw ZeroDipole("pulse_duration: dipole moment between levels " + std::to_string(pulse.n) +
                     " and " + std::to_string(pulse.m) + " vanishes");
  }
  return pulse.theta / (2.0 * field_amplitude * d);
}

QuditState evolve_pulse(const QuditState& state, const Pulse& pulse, const DipoleMatrix& dipole,
                        double field_amplitude) {
  const double d = dipole.at(pulse.n, pulse.m);
  if (std::abs(d) < kZeroDipoleTol) {
    throw ZeroDipole("evolve_pulse: dipole moment between levels " + std::to_string(pulse.n) +
                     " and " + std::to_string(pulse.m) + " vanishes");
  }
  const double t = pulse.theta / (2.0 * field_amplitude * d);
  const Complex field = std::polar(field_amplitude, 3.0 * kPi / 2.0);
  const Complex z = field * d;  // <n|V|m> of the resonant interaction term

  // exp(-i V t) on the block: V has zero diagonal there, so
  // U = cos(|z| t) I - i sin(|z| t) V / |z|.
  const double mag = std::abs(z);
  const double arg = mag * t;
  const Complex diag = std::cos(arg);
  const Complex off_nm = Complex{0.0, -1.0} * std::sin(arg) * (z / mag);
  const Complex off_mn = Complex{0.0, -1.0} * std::sin(arg) * std::conj(z / mag);

  QuditState out = state;
  const Complex cn = state.amp[static_cast<size_t>(pulse.n - 1)];
  const Complex cm = state.amp[static_cast<size_t>(pulse.m - 1)];
  out.amp[static_cast<size_t>(pulse.n - 1)] = diag * cn + off_nm * cm;
  out.amp[static_cast<size_t>(pulse.m - 1)] = off_mn * cn + diag * cm;
  return out;
}

QuditState evolve_schedule(const QuditState& state, const PulseSchedule& schedule,
                           const DipoleMatrix& dipole, double field_amplitude) {
  QuditState s = state;
  for (const Pulse& p : schedule.pulses) s = evolve_pulse(s, p, dipole, field_amplitude);
  return s;
}

ComplexMatrix schedule_unitary(const PulseSchedule& schedule) {
  ComplexMatrix u = ComplexMatrix::identity(7);
  for (const Pulse& p : schedule.pulses) u = rotation(p.n, p.m, p.theta) * u;
  return u;
}

namespace {

PulseSchedule hadamard_schedule() {
  return {"H_B", {Pulse(1, 7.0 * kPi / 2.0), Pulse(2, 2.0 * kPi), Pulse(3, 5.0 * kPi / 2.0),
                  Pulse(5, 7.0 * kPi / 2.0), Pulse(6, 2.0 * kPi)}};
}

PulseSchedule swap01_schedule() {
  return {"U01_A", {Pulse(2, kPi), Pulse(1, kPi), Pulse(3, kPi), Pulse(2, kPi)}};
}

PulseSchedule swap12_schedule() {
  return {"U12_A", {Pulse(4, kPi), Pulse(3, kPi), Pulse(5, kPi), Pulse(4, kPi)}};
}

PulseSchedule z_schedule(int n) {
  PulseSchedule sched{"Z_" + std::to_string(n), {}};
  for (int m = n; m <= 6; ++m) sched.pulses.emplace_back(m, 2.0 * kPi);
  return sched;
}

ComplexMatrix hadamard_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(7);
  for (int base : {0, 2, 4}) {
    h(base, base) = s;
    h(base, base + 1) = s;
    h(base + 1, base) = s;
    h(base + 1, base + 1) = -s;
  }
  h(6, 6) = -1.0;
  return h;
}

ComplexMatrix swap_matrix(int lo) {
  // Permutation exchanging levels lo <-> lo+2 and lo+1 <-> lo+3 (1-based).
  ComplexMatrix u(7);
  for (int lvl = 1; lvl <= 7; ++lvl) {
    int target = lvl;
    if (lvl == lo || lvl == lo + 1) target = lvl + 2;
    if (lvl == lo + 2 || lvl == lo + 3) target = lvl - 2;
    u(target - 1, lvl - 1) = 1.0;
  }
  return u;
}

ComplexMatrix z_matrix(int n) {
  ComplexMatrix u = ComplexMatrix::identity(7);
  u(n - 1, n - 1) = -1.0;
  u(6, 6) = -1.0;
  return u;
}

}  // namespace

GateLibrary gate_library() {
  GateLibrary lib;
  lib.hadamard = make_gate("H_B", hadamard_matrix(), hadamard_schedule());
  lib.swap01 = make_gate("U01_A", swap_matrix(1), swap01_schedule());
  lib.swap12 = make_gate("U12_A", swap_matrix(3), swap12_schedule());
  for (int n = 1; n <= 6; ++n) {
    lib.z[static_cast<size_t>(n - 1)] = make_gate("Z_" + std::to_string(n), z_matrix(n),
                                                  z_schedule(n));
  }
  lib.sigma_z.name = "sigma_z_B";
  lib.sigma_z.matrix = ComplexMatrix(7);
  for (int lvl = 1; lvl <= 6; ++lvl) {
    lib.sigma_z.matrix(lvl - 1, lvl - 1) = (lvl % 2 == 1) ? 1.0 : -1.0;
  }
  lib.sigma_z.schedule.label = "sigma_z_B";
  lib.sigma_z.global_phase = 1;
  return lib;
}

ComplexMatrix parity_oracle(const BitString6& s) {
  ComplexMatrix u = ComplexMatrix::identity(7);
  int total = 0;
  for (int n = 1; n <= 6; ++n) {
    if (s.bit(n)) {
      u(n - 1, n - 1) = -1.0;
      total ^= 1;
    }
  }
  u(6, 6) = total ? -1.0 : 1.0;
  return u;
}

PulseSchedule oracle_schedule(const BitString6& s) {
  PulseSchedule sched{"O_" + s.str(), {}};
  for (int n = 1; n <= 6; ++n) {
    if (!s.bit(n)) continue;
    const PulseSchedule z = z_schedule(n);
    sched.pulses.insert(sched.pulses.end(), z.pulses.begin(), z.pulses.end());
  }
  return sched;
}

namespace {

ParityRun finish_run(QuditState state, int queries) {
  ParityRun run;
  run.final_state = state;
  run.oracle_queries = queries;
  run.outcome = state.population(6) > state.population(5) ? 1 : 0;
  const Complex lead = state.amp[static_cast<size_t>(run.outcome == 1 ? 5 : 4)];
  run.global_phase = lead.real() >= 0.0 ? 1 : -1;
  return run;
}

}  // namespace

ParityRun run_parity_algorithm(const BitString6& s) {
  static const GateLibrary lib = gate_library();  // immutable, built once
  const ComplexMatrix oracle = parity_oracle(s);
  int queries = 0;

  QuditState state = QuditState::basis(1);
  state = apply(lib.hadamard.matrix, state);
  state = apply(oracle, state);
  ++queries;
  state = apply(lib.swap01.matrix, state);
  state = apply(oracle, state);
  ++queries;
  state = apply(lib.swap12.matrix, state);
  state = apply(oracle, state);
  ++queries;
  state = apply(lib.hadamard.matrix, state);

  return finish_run(state, queries);
}

ParityRun run_parity_algorithm(const BitString6& s, const DipoleMatrix& dipole,
                               double field_amplitude) {
  const PulseSchedule oracle = oracle_schedule(s);
  int queries = 0;

  QuditState state = QuditState::basis(1);
  state = evolve_schedule(state, hadamard_schedule(), dipole, field_amplitude);
  state = evolve_schedule(state, oracle, dipole, field_amplitude);
  ++queries;
  state = evolve_schedule(state, swap01_schedule(), dipole, field_amplitude);
  state = evolve_schedule(state, oracle, dipole, field_amplitude);
  ++queries;
  state = evolve_schedule(state, swap12_schedule(), dipole, field_amplitude);
  state = evolve_schedule(state, oracle, dipole, field_amplitude);
  ++queries;
  state = evolve_schedule(state, hadamard_schedule(), dipole, field_amplitude);

  return finish_run(state, queries);
}

double measure_parity_observable(const QuditState& state) {
  const double ancilla = state.population(7);
  if (ancilla > 1e-9) {
    throw AncillaOccupied("measure_parity_observable: level-7 population " +
                          std::to_string(ancilla) + " exceeds 1e-9");
  }
  double expectation = 0.0;
  for (int lvl = 1; lvl <= 6; ++lvl) {
    expectation += (lvl % 2 == 1 ? 1.0 : -1.0) * state.population(lvl);
  }
  return expectation;
}

double position_density_readout(const QuditState& state, std::span<const BoundState> states) {
  if (states.size() != 7) {
    throw DimensionMismatch("position_density_readout: expected 7 bound states, got " +
                            std::to_string(states.size()));
  }
  Complex amplitude = 0.0;
  for (size_t i = 0; i < 7; ++i) amplitude += state.amp[i] * wavefunction(states[i], 0.0);
  return std::norm(amplitude);
}

}  // namespace qwell
