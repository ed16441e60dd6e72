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

#include "qwell/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "qwell/encodings.hpp"

namespace qwell {

namespace {

void require_energies(std::span<const double> energies) {
  if (energies.size() != 7) {
    throw std::invalid_argument("thermal: expected exactly 7 energies");
  }
  for (size_t i = 1; i < energies.size(); ++i) {
    if (!(energies[i] > energies[i - 1])) {
      throw std::invalid_argument("thermal: energies must be strictly increasing");
    }
  }
}

std::array<double, 7> boltzmann_populations(std::span<const double> energies, double T) {
  std::array<double, 7> w{};
  double z = 0.0;
  for (int n = 0; n < 7; ++n) {
    w[n] = std::exp(-(energies[n] - energies[0]) / T);
    z += w[n];
  }
  for (double& p : w) p /= z;
  return w;
}

}  // namespace

ComplexMatrix gibbs_state(const GibbsSpec& spec) {
  require_energies(spec.energies);
  if (!(spec.temperature > 0.0)) {
    throw std::invalid_argument("gibbs_state: temperature must be positive");
  }
  const auto pop = boltzmann_populations(spec.energies, spec.temperature);
  return ComplexMatrix::diagonal(std::span<const double>(pop));
}

std::vector<SweepRecord> information_sweep(std::span<const double> energies,
                                           std::span<const double> temperature_grid) {
  require_energies(energies);
  for (size_t i = 0; i < temperature_grid.size(); ++i) {
    if (!(temperature_grid[i] > 0.0)) {
      throw std::invalid_argument("information_sweep: temperatures must be positive");
    }
    if (i > 0 && !(temperature_grid[i] > temperature_grid[i - 1])) {
      throw std::invalid_argument("information_sweep: temperature grid must be ascending");
    }
  }

  GibbsSpec spec;
  for (int n = 0; n < 7; ++n) spec.energies[n] = energies[n];

  std::vector<SweepRecord> records;
  records.reserve(temperature_grid.size());
  for (double T : temperature_grid) {
    spec.temperature = T;
    const ComplexMatrix rho = gibbs_state(spec);
    SweepRecord rec;
    rec.T = T;
    rec.I_AB = mutual_information(rho, Subsystem::AB);
    rec.I_AC = mutual_information(rho, Subsystem::AC);
    rec.I_BC = mutual_information(rho, Subsystem::BC);
    rec.I_AB_given_C = conditional_mutual_information(rho, Subsystem::AB, Subsystem::C);
    rec.I_AC_given_B = conditional_mutual_information(rho, Subsystem::AC, Subsystem::B);
    rec.I_BC_given_A = conditional_mutual_information(rho, Subsystem::BC, Subsystem::A);
    records.push_back(rec);
  }
  return records;
}

std::vector<double> default_temperature_grid() {
  constexpr int kPoints = 200;
  constexpr double kMin = 0.1;
  constexpr double kMax = 50.0;
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    grid[i] = kMin + (kMax - kMin) * static_cast<double>(i) / (kPoints - 1);
  }
  return grid;
}

double continuum_occupation_estimate(std::span<const double> energies, double temperature) {
  require_energies(energies);
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("continuum_occupation_estimate: temperature must be positive");
  }
  // Weights relative to the ground state; the hypothetical E = 0 level gets
  // weight exp(E_1 / T) on that scale (energies are negative).
  double z = 0.0;
  for (double e : energies) z += std::exp(-(e - energies[0]) / temperature);
  const double w_edge = std::exp(energies[0] / temperature);
  return w_edge / (z + w_edge);
}

}  // namespace qwell
