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

#include "qwell/encodings.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "qwell/spectral.hpp"

namespace qwell {

namespace {

constexpr std::array<int, 3> kQubitDims{2, 2, 2};

std::vector<int> kept_factors(Subsystem s) {
  switch (s) {
    case Subsystem::A: return {0};
    case Subsystem::B: return {1};
    case Subsystem::C: return {2};
    case Subsystem::AB: return {0, 1};
    case Subsystem::AC: return {0, 2};
    case Subsystem::BC: return {1, 2};
  }
  throw std::invalid_argument("unknown subsystem");
}

bool is_pair(Subsystem s) {
  return s == Subsystem::AB || s == Subsystem::AC || s == Subsystem::BC;
}

Subsystem pair_of(Subsystem x, Subsystem y) {
  const bool a = x == Subsystem::A || y == Subsystem::A;
  const bool b = x == Subsystem::B || y == Subsystem::B;
  const bool c = x == Subsystem::C || y == Subsystem::C;
  if (a && b) return Subsystem::AB;
  if (a && c) return Subsystem::AC;
  if (b && c) return Subsystem::BC;
  throw std::invalid_argument("pair_of: arguments must be two distinct single subsystems");
}

void split_pair(Subsystem pair, Subsystem& x, Subsystem& y) {
  switch (pair) {
    case Subsystem::AB: x = Subsystem::A; y = Subsystem::B; return;
    case Subsystem::AC: x = Subsystem::A; y = Subsystem::C; return;
    case Subsystem::BC: x = Subsystem::B; y = Subsystem::C; return;
    default: throw std::invalid_argument("expected a two-subsystem pair");
  }
}

void require_rho7(const ComplexMatrix& rho7, const char* who) {
  if (rho7.dim() != 7) {
    throw DimensionMismatch(std::string(who) + ": expected a 7x7 matrix, got dimension " +
                            std::to_string(rho7.dim()));
  }
  require_density_matrix(rho7, who);
}

}  // namespace

const char* to_string(Subsystem s) {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    case Subsystem::C: return "C";
    case Subsystem::AB: return "AB";
    case Subsystem::AC: return "AC";
    case Subsystem::BC: return "BC";
  }
  return "?";
}

EncodingMap three_qubit_encoding() {
  EncodingMap map;
  map.name = "three_qubit";
  map.target_factor_dims = {2, 2, 2};
  for (int n = 1; n <= 7; ++n) {
    const int v = n - 1;
    map.level_labels.push_back({char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                                char('0' + (v & 1))});
  }
  map.padding_labels = {"111"};
  return map;
}

EncodingMap qubit_qutrit_encoding() {
  EncodingMap map;
  map.name = "qubit_qutrit";
  map.target_factor_dims = {3, 2};
  for (int n = 1; n <= 6; ++n) {
    const int v = n - 1;
    map.level_labels.push_back({char('0' + v / 2), char('0' + v % 2)});
  }
  map.level_labels.push_back("ancillary");
  map.padding_labels = {"ancillary"};
  return map;
}

ComplexMatrix embed_7_to_8(const ComplexMatrix& rho7) {
  require_rho7(rho7, "embed_7_to_8");
  ComplexMatrix out(8);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) out(r, c) = rho7(r, c);
  return out;
}

ComplexMatrix reduced_state(const ComplexMatrix& rho7, Subsystem which) {
  const ComplexMatrix rho8 = embed_7_to_8(rho7);
  const std::vector<int> kept = kept_factors(which);
  return partial_trace(rho8, kQubitDims, kept);
}

ComplexMatrix reduced_state_closed_form(const ComplexMatrix& rho7, Subsystem which) {
  require_rho7(rho7, "reduced_state_closed_form");
  // 1-based accessor into the 7x7 block; indices beyond 7 address the
  // unoccupied pad and read as zero.
  auto p = [&](int i, int j) -> Complex {
    if (i > 7 || j > 7) return Complex{0.0, 0.0};
    return rho7(i - 1, j - 1);
  };
  auto hermitize = [](ComplexMatrix m) {
    for (int r = 0; r < m.dim(); ++r)
      for (int c = r + 1; c < m.dim(); ++c) m(c, r) = std::conj(m(r, c));
    return m;
  };
  switch (which) {
    case Subsystem::A: {
      ComplexMatrix m(2);
      m(0, 0) = p(1, 1) + p(2, 2) + p(3, 3) + p(4, 4);
      m(0, 1) = p(1, 5) + p(2, 6) + p(3, 7);
      m(1, 1) = p(5, 5) + p(6, 6) + p(7, 7);
      return hermitize(m);
    }
    case Subsystem::B: {
      ComplexMatrix m(2);
      m(0, 0) = p(1, 1) + p(5, 5) + p(2, 2) + p(6, 6);
      m(0, 1) = p(1, 3) + p(5, 7) + p(2, 4);
      m(1, 1) = p(3, 3) + p(7, 7) + p(4, 4);
      return hermitize(m);
    }
    case Subsystem::C: {
      ComplexMatrix m(2);
      m(0, 0) = p(1, 1) + p(3, 3) + p(5, 5) + p(7, 7);
      m(0, 1) = p(1, 2) + p(3, 4) + p(5, 6);
      m(1, 1) = p(2, 2) + p(4, 4) + p(6, 6);
      return hermitize(m);
    }
    case Subsystem::AB: {
      ComplexMatrix m(4);
      m(0, 0) = p(1, 1) + p(2, 2);
      m(0, 1) = p(1, 3) + p(2, 4);
      m(0, 2) = p(1, 5) + p(2, 6);
      m(0, 3) = p(1, 7);
      m(1, 1) = p(3, 3) + p(4, 4);
      m(1, 2) = p(3, 5) + p(4, 6);
      m(1, 3) = p(3, 7);
      m(2, 2) = p(5, 5) + p(6, 6);
      m(2, 3) = p(5, 7);
      m(3, 3) = p(7, 7);
      return hermitize(m);
    }
    case Subsystem::AC: {
      ComplexMatrix m(4);
      m(0, 0) = p(1, 1) + p(3, 3);
      m(0, 1) = p(1, 2) + p(3, 4);
      m(0, 2) = p(1, 5) + p(3, 7);
      m(0, 3) = p(1, 6);
      m(1, 1) = p(2, 2) + p(4, 4);
      m(1, 2) = p(2, 5) + p(4, 7);
      m(1, 3) = p(2, 6);
      m(2, 2) = p(5, 5) + p(7, 7);
      m(2, 3) = p(5, 6);
      m(3, 3) = p(6, 6);
      return hermitize(m);
    }
    case Subsystem::BC: {
      ComplexMatrix m(4);
      m(0, 0) = p(1, 1) + p(5, 5);
      m(0, 1) = p(1, 2) + p(5, 6);
      m(0, 2) = p(1, 3) + p(5, 7);
      m(0, 3) = p(1, 4);
      m(1, 1) = p(2, 2) + p(6, 6);
      m(1, 2) = p(2, 3) + p(6, 7);
      m(1, 3) = p(2, 4);
      m(2, 2) = p(3, 3) + p(7, 7);
      m(2, 3) = p(3, 4);
      m(3, 3) = p(4, 4);
      return hermitize(m);
    }
  }
  throw std::invalid_argument("unknown subsystem");
}

double mutual_information(const ComplexMatrix& rho7, Subsystem pair) {
  if (!is_pair(pair)) {
    throw std::invalid_argument("mutual_information: expected AB, AC or BC");
  }
  Subsystem x, y;
  split_pair(pair, x, y);
  const double s_x = von_neumann_entropy(reduced_state(rho7, x));
  const double s_y = von_neumann_entropy(reduced_state(rho7, y));
  const double s_xy = von_neumann_entropy(reduced_state(rho7, pair));
  return s_x + s_y - s_xy;
}

double conditional_mutual_information(const ComplexMatrix& rho7, Subsystem pair,
                                      Subsystem given) {
  if (!is_pair(pair) || is_pair(given)) {
    throw std::invalid_argument(
        "conditional_mutual_information: expected a pair and a single subsystem");
  }
  Subsystem x, y;
  split_pair(pair, x, y);
  if (given == x || given == y) {
    throw std::invalid_argument(
        "conditional_mutual_information: conditioning subsystem must not be in the pair");
  }
  const ComplexMatrix rho8 = embed_7_to_8(rho7);
  const double s_xz = von_neumann_entropy(reduced_state(rho7, pair_of(x, given)));
  const double s_yz = von_neumann_entropy(reduced_state(rho7, pair_of(y, given)));
  const double s_z = von_neumann_entropy(reduced_state(rho7, given));
  const double s_xyz = von_neumann_entropy(rho8);
  return s_xz + s_yz - s_z - s_xyz;
}

std::pair<ComplexMatrix, ComplexMatrix> qutrit_qubit_split(const ComplexMatrix& rho7) {
  require_rho7(rho7, "qutrit_qubit_split");
  const double ancilla = rho7(6, 6).real();
  if (std::abs(ancilla) > 1e-9) {
    throw AncillaOccupied("qutrit_qubit_split: ancillary level population " +
                          std::to_string(ancilla) + " exceeds 1e-9");
  }
  ComplexMatrix block(6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) block(r, c) = rho7(r, c);
  const double tr = block.trace().real();
  block *= Complex{1.0 / tr, 0.0};
  const std::array<int, 2> dims{3, 2};
  const std::array<int, 1> keep_qutrit{0};
  const std::array<int, 1> keep_qubit{1};
  return {partial_trace(block, dims, keep_qutrit), partial_trace(block, dims, keep_qubit)};
}

}  // namespace qwell
