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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qwell/pulse_gates.hpp"
#include "qwell/well.hpp"

using qwell::BitString6;
using qwell::Complex;
using qwell::ComplexMatrix;
using qwell::DipoleMatrix;
using qwell::QuditState;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<qwell::BoundState>& default_states() {
  static const auto states = qwell::solve_bound_states(qwell::WellSpec{});
  return states;
}

const DipoleMatrix& default_dipole() {
  static const auto d = qwell::dipole_matrix(default_states());
  return d;
}

QuditState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  QuditState s;
  double norm = 0.0;
  for (auto& c : s.amp) {
    c = Complex{gauss(rng), gauss(rng)};
    norm += std::norm(c);
  }
  for (auto& c : s.amp) c /= std::sqrt(norm);
  return s;
}

}  // namespace

TEST_CASE("rotation basics") {
  CHECK(qwell::max_abs_diff(qwell::rotation(1, 2, 0.0), ComplexMatrix::identity(7)) == 0.0);

  const ComplexMatrix r = qwell::rotation(1, 2, kPi);
  CHECK(std::abs(r(0, 0)) < 1e-15);
  CHECK(std::abs(r(0, 1) - Complex{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(r(1, 0) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(r(1, 1)) < 1e-15);

  const ComplexMatrix full = qwell::rotation(3, 4, 2.0 * kPi);
  for (int i = 0; i < 7; ++i) {
    const double expected = (i == 2 || i == 3) ? -1.0 : 1.0;
    CHECK(std::abs(full(i, i) - Complex{expected, 0.0}) < 1e-15);
  }

  CHECK_THROWS_AS(qwell::rotation(0, 1, 1.0), qwell::BadLevels);
  CHECK_THROWS_AS(qwell::rotation(3, 3, 1.0), qwell::BadLevels);
  CHECK_THROWS_AS(qwell::rotation(2, 8, 1.0), qwell::BadLevels);
}

TEST_CASE("rotations are unitary") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int n = 1; n < 7; ++n) {
    for (int m = n + 1; m <= 7; ++m) {
      CHECK(qwell::is_unitary(qwell::rotation(n, m, angle(rng)), 1e-12));
    }
  }
}

TEST_CASE("pulses address adjacent levels only") {
  CHECK_NOTHROW(qwell::Pulse(1, kPi));
  CHECK_NOTHROW(qwell::Pulse(6, kPi));
  CHECK_THROWS_AS(qwell::Pulse(7, kPi), qwell::BadLevels);
  CHECK_THROWS_AS(qwell::Pulse(0, kPi), qwell::BadLevels);
}

TEST_CASE("pulse duration derives from the dipole moment") {
  const auto& d = default_dipole();
  const qwell::Pulse p(1, kPi);
  CHECK(qwell::pulse_duration(p, d) == kPi / (2.0 * d.at(1, 2)));
  CHECK(qwell::pulse_duration(p, d, 2.0) == kPi / (4.0 * d.at(1, 2)));

  DipoleMatrix zero(7);
  CHECK_THROWS_AS(qwell::pulse_duration(p, zero), qwell::ZeroDipole);
}

TEST_CASE("pulse evolution examples") {
  const auto& d = default_dipole();

  SUBCASE("zero angle leaves the state unchanged") {
    std::mt19937_64 rng(1);
    const QuditState s = random_state(rng);
    const QuditState out = qwell::evolve_pulse(s, qwell::Pulse(3, 0.0), d);
    for (size_t i = 0; i < 7; ++i) CHECK(std::abs(out.amp[i] - s.amp[i]) < 1e-15);
  }
  SUBCASE("a pi pulse transfers level 1 to level 2") {
    const QuditState out = qwell::evolve_pulse(QuditState::basis(1), qwell::Pulse(1, kPi), d);
    CHECK(out.population(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(out.amp[1] - Complex{1.0, 0.0}) < 1e-12);  // + sign of the rotation block
  }
  SUBCASE("zero dipole moment is an error") {
    DipoleMatrix zero(7);
    CHECK_THROWS_AS(qwell::evolve_pulse(QuditState::basis(1), qwell::Pulse(1, kPi), zero),
                    qwell::ZeroDipole);
  }
}

TEST_CASE("pulse propagator equals the rotation matrix path") {
  const auto& d = default_dipole();
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-4.0 * kPi, 4.0 * kPi);
  std::uniform_int_distribution<int> level(1, 6);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = level(rng);
    const double theta = angle(rng);
    const QuditState s = random_state(rng);
    const QuditState via_pulse = qwell::evolve_pulse(s, qwell::Pulse(n, theta), d);
    const QuditState via_rotation = qwell::apply(qwell::rotation(n, n + 1, theta), s);
    double diff = 0.0;
    for (size_t i = 0; i < 7; ++i) {
      diff = std::max(diff, std::abs(via_pulse.amp[i] - via_rotation.amp[i]));
    }
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("gate library matches the explicit matrices") {
  const auto lib = qwell::gate_library();

  SUBCASE("Hadamard blocks and the phase-accumulating corner") {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix& h = lib.hadamard.matrix;
    for (int base : {0, 2, 4}) {
      CHECK(h(base, base) == Complex{s, 0.0});
      CHECK(h(base, base + 1) == Complex{s, 0.0});
      CHECK(h(base + 1, base) == Complex{s, 0.0});
      CHECK(h(base + 1, base + 1) == Complex{-s, 0.0});
    }
    CHECK(h(6, 6) == Complex{-1.0, 0.0});
  }
  SUBCASE("qutrit swaps are the printed permutations") {
    const ComplexMatrix& u01 = lib.swap01.matrix;
    CHECK(u01(0, 2) == Complex{1.0, 0.0});
    CHECK(u01(1, 3) == Complex{1.0, 0.0});
    CHECK(u01(2, 0) == Complex{1.0, 0.0});
    CHECK(u01(3, 1) == Complex{1.0, 0.0});
    CHECK(u01(4, 4) == Complex{1.0, 0.0});
    CHECK(u01(6, 6) == Complex{1.0, 0.0});

    const ComplexMatrix& u12 = lib.swap12.matrix;
    CHECK(u12(2, 4) == Complex{1.0, 0.0});
    CHECK(u12(4, 2) == Complex{1.0, 0.0});
    CHECK(u12(3, 5) == Complex{1.0, 0.0});
    CHECK(u12(5, 3) == Complex{1.0, 0.0});
    CHECK(u12(0, 0) == Complex{1.0, 0.0});
  }
  SUBCASE("Z gates flip their level and the ancilla") {
    for (int n = 1; n <= 6; ++n) {
      const ComplexMatrix& z = lib.z[static_cast<size_t>(n - 1)].matrix;
      for (int i = 0; i < 7; ++i) {
        const double expected = (i == n - 1 || i == 6) ? -1.0 : 1.0;
        CHECK(z(i, i) == Complex{expected, 0.0});
      }
    }
  }
  SUBCASE("schedule products equal the matrices with recorded phase") {
    auto check_gate = [](const qwell::Gate& g) {
      CAPTURE(g.name);
      CHECK((g.global_phase == 1 || g.global_phase == -1));
      ComplexMatrix reference = g.matrix;
      reference *= Complex{static_cast<double>(g.global_phase), 0.0};
      CHECK(qwell::max_abs_diff(qwell::schedule_unitary(g.schedule), reference) < 1e-10);
      CHECK(g.global_phase == 1);  // these decompositions realize the gates exactly
    };
    check_gate(lib.hadamard);
    check_gate(lib.swap01);
    check_gate(lib.swap12);
    for (const auto& z : lib.z) check_gate(z);
  }
  SUBCASE("every gate is unitary; sigma_z is the readout observable") {
    CHECK(qwell::is_unitary(lib.hadamard.matrix, 1e-12));
    CHECK(qwell::is_unitary(lib.swap01.matrix, 1e-12));
    CHECK(qwell::is_unitary(lib.swap12.matrix, 1e-12));
    for (const auto& z : lib.z) CHECK(qwell::is_unitary(z.matrix, 1e-12));
    for (int i = 0; i < 7; ++i) {
      const double expected = i == 6 ? 0.0 : (i % 2 == 0 ? 1.0 : -1.0);
      CHECK(lib.sigma_z.matrix(i, i) == Complex{expected, 0.0});
    }
    CHECK(lib.sigma_z.schedule.pulses.empty());
  }
}

TEST_CASE("oracle construction") {
  SUBCASE("all-zero string gives the identity") {
    CHECK(qwell::max_abs_diff(qwell::parity_oracle(BitString6::parse("000000")),
                              ComplexMatrix::identity(7)) == 0.0);
  }
  SUBCASE("single leading bit") {
    const ComplexMatrix o = qwell::parity_oracle(BitString6::parse("100000"));
    for (int i = 0; i < 7; ++i) {
      const double expected = (i == 0 || i == 6) ? -1.0 : 1.0;
      CHECK(o(i, i) == Complex{expected, 0.0});
    }
  }
  SUBCASE("squares to the identity and equals the Z-product, exactly") {
    const auto lib = qwell::gate_library();
    for (unsigned v = 0; v < 64; ++v) {
      const BitString6 s = BitString6::from_index(v);
      const ComplexMatrix o = qwell::parity_oracle(s);
      CHECK(qwell::max_abs_diff(o * o, ComplexMatrix::identity(7)) == 0.0);

      ComplexMatrix product = ComplexMatrix::identity(7);
      for (int n = 1; n <= 6; ++n) {
        if (s.bit(n)) product = lib.z[static_cast<size_t>(n - 1)].matrix * product;
      }
      CHECK(qwell::max_abs_diff(o, product) == 0.0);
      CHECK(qwell::is_unitary(o, 1e-15));
    }
  }
}

TEST_CASE("oracle schedules realize the oracle unitary") {
  for (const char* text : {"000000", "100000", "010101", "111111"}) {
    const BitString6 s = BitString6::parse(text);
    const ComplexMatrix u = qwell::schedule_unitary(qwell::oracle_schedule(s));
    CHECK(qwell::is_unitary(u, 1e-12));
    CHECK(qwell::max_abs_diff(u, qwell::parity_oracle(s)) < 1e-12);
  }
}

TEST_CASE("bit strings parse and validate") {
  const BitString6 s = BitString6::parse("010101");
  CHECK(s.bit(1) == 0);
  CHECK(s.bit(2) == 1);
  CHECK(s.parity() == 1);
  CHECK(s.str() == "010101");
  CHECK_THROWS_AS(BitString6::parse("01010"), std::invalid_argument);
  CHECK_THROWS_AS(BitString6::parse("0101012"), std::invalid_argument);
  CHECK_THROWS_AS(BitString6::parse("01010x"), std::invalid_argument);
}

TEST_CASE("parity runs on reference strings") {
  SUBCASE("all zeros: even, +|level 5>") {
    const auto run = qwell::run_parity_algorithm(BitString6::parse("000000"));
    CHECK(run.outcome == 0);
    CHECK(run.global_phase == 1);
    CHECK(run.oracle_queries == 3);
    CHECK(std::abs(run.final_state.amp[4] - Complex{1.0, 0.0}) < 1e-12);
  }
  SUBCASE("all ones: even parity, negative phase") {
    const auto run = qwell::run_parity_algorithm(BitString6::parse("111111"));
    CHECK(run.outcome == 0);
    CHECK(run.global_phase == -1);
    CHECK(std::abs(run.final_state.amp[4] - Complex{-1.0, 0.0}) < 1e-12);
  }
  SUBCASE("single bit: odd parity, negative phase") {
    const auto run = qwell::run_parity_algorithm(BitString6::parse("100000"));
    CHECK(run.outcome == 1);
    CHECK(run.global_phase == -1);
    CHECK(std::abs(run.final_state.amp[5] - Complex{-1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("parity algorithm solves all 64 strings at both levels") {
  const auto& dipole = default_dipole();
  for (unsigned v = 0; v < 64; ++v) {
    const BitString6 s = BitString6::from_index(v);
    CAPTURE(s.str());

    int xor_parity = 0;  // independent classical reference
    for (int n = 1; n <= 6; ++n) xor_parity ^= s.bit(n);
    int phase_exponent = s.bit(1) ^ s.bit(3) ^ s.bit(5);

    const auto gate_run = qwell::run_parity_algorithm(s);
    CHECK(gate_run.outcome == xor_parity);
    CHECK(gate_run.oracle_queries == 3);
    CHECK(gate_run.global_phase == (phase_exponent ? -1 : 1));

    const int target = gate_run.outcome == 1 ? 6 : 5;
    double off_target = 0.0;
    for (int lvl = 1; lvl <= 7; ++lvl) {
      if (lvl != target) off_target += gate_run.final_state.population(lvl);
    }
    CHECK(off_target < 1e-10);
    CHECK(gate_run.final_state.population(7) < 1e-10);

    const auto pulse_run = qwell::run_parity_algorithm(s, dipole);
    CHECK(pulse_run.outcome == gate_run.outcome);
    CHECK(pulse_run.global_phase == gate_run.global_phase);
    CHECK(pulse_run.oracle_queries == 3);
    double diff = 0.0;
    for (size_t i = 0; i < 7; ++i) {
      diff = std::max(diff, std::abs(pulse_run.final_state.amp[i] - gate_run.final_state.amp[i]));
    }
    CHECK(diff < 1e-9);
  }
}

TEST_CASE("two-bit strings reduce to the Deutsch problem") {
  // Oracle strings with s3..s6 = 0 probe a function of a single qubit;
  // the run distinguishes constant (even) from balanced (odd) inputs.
  for (unsigned v = 0; v < 4; ++v) {
    const BitString6 s = BitString6::from_index(v);
    const auto run = qwell::run_parity_algorithm(s);
    CHECK(run.outcome == (s.bit(1) ^ s.bit(2)));
  }
}

TEST_CASE("readout observable") {
  SUBCASE("pure outcomes") {
    CHECK(qwell::measure_parity_observable(QuditState::basis(5)) == doctest::Approx(1.0));
    CHECK(qwell::measure_parity_observable(QuditState::basis(6)) == doctest::Approx(-1.0));
  }
  SUBCASE("balanced superposition averages to zero") {
    QuditState s;
    for (int lvl = 1; lvl <= 6; ++lvl) s.amp[static_cast<size_t>(lvl - 1)] = 1.0 / std::sqrt(6.0);
    CHECK(qwell::measure_parity_observable(s) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("occupied ancilla is rejected") {
    QuditState s = QuditState::basis(7);
    CHECK_THROWS_AS(qwell::measure_parity_observable(s), qwell::AncillaOccupied);
  }
  SUBCASE("algorithm outputs satisfy <sigma_z> = 1 - 2 p(s)") {
    for (unsigned v = 0; v < 64; ++v) {
      const BitString6 s = BitString6::from_index(v);
      const auto run = qwell::run_parity_algorithm(s);
      CHECK(std::abs(qwell::measure_parity_observable(run.final_state) -
                     (1.0 - 2.0 * s.parity())) < 1e-10);
    }
  }
}

TEST_CASE("center-of-trap density readout distinguishes the outcomes") {
  const auto& states = default_states();

  SUBCASE("odd-parity levels carry no density at the origin") {
    CHECK(qwell::position_density_readout(QuditState::basis(2), states) == 0.0);
    const auto odd_run = qwell::run_parity_algorithm(BitString6::parse("100000"));
    CHECK(qwell::position_density_readout(odd_run.final_state, states) < 1e-12);
  }
  SUBCASE("even outcomes light up the origin") {
    const auto even_run = qwell::run_parity_algorithm(BitString6::parse("000000"));
    const double density = qwell::position_density_readout(even_run.final_state, states);
    CHECK(density > 0.1);
    const double psi5 = qwell::wavefunction(states[4], 0.0);
    CHECK(density == doctest::Approx(psi5 * psi5).epsilon(1e-12));
  }
}
