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

#include <benchmark/benchmark.h>

#include <array>
#include <random>

#include "qwell/encodings.hpp"
#include "qwell/pulse_gates.hpp"
#include "qwell/spectral.hpp"
#include "qwell/thermal.hpp"
#include "qwell/well.hpp"

namespace {

qwell::ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  qwell::ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = gauss(rng);
    for (int c = r + 1; c < dim; ++c) {
      const qwell::Complex v{gauss(rng), gauss(rng)};
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

const std::vector<qwell::BoundState>& states() {
  static const auto s = qwell::solve_bound_states(qwell::WellSpec{});
  return s;
}

qwell::GibbsSpec gibbs_spec(double T) {
  qwell::GibbsSpec spec;
  for (size_t i = 0; i < 7; ++i) spec.energies[i] = states()[i].energy;
  spec.temperature = T;
  return spec;
}

void BM_EigHermitian(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::eig_hermitian(m));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(7)->Arg(8);

void BM_PartialTraceToPair(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto g = random_hermitian(8, rng);
  auto rho = g * g.dagger();
  rho *= qwell::Complex{1.0 / rho.trace().real(), 0.0};
  const std::array<int, 3> dims{2, 2, 2};
  const std::array<int, 2> keep{0, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::partial_trace(rho, dims, keep));
  }
}
BENCHMARK(BM_PartialTraceToPair);

void BM_SolveBoundStates(benchmark::State& state) {
  const qwell::WellSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::solve_bound_states(spec));
  }
}
BENCHMARK(BM_SolveBoundStates);

void BM_DipoleMatrix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::dipole_matrix(states()));
  }
}
BENCHMARK(BM_DipoleMatrix);

void BM_SweepPoint(benchmark::State& state) {
  const auto rho = qwell::gibbs_state(gibbs_spec(18.0));
  for (auto _ : state) {
    double acc = 0.0;
    acc += qwell::mutual_information(rho, qwell::Subsystem::AB);
    acc += qwell::mutual_information(rho, qwell::Subsystem::AC);
    acc += qwell::mutual_information(rho, qwell::Subsystem::BC);
    acc += qwell::conditional_mutual_information(rho, qwell::Subsystem::AB, qwell::Subsystem::C);
    acc += qwell::conditional_mutual_information(rho, qwell::Subsystem::AC, qwell::Subsystem::B);
    acc += qwell::conditional_mutual_information(rho, qwell::Subsystem::BC, qwell::Subsystem::A);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_SweepPoint);

void BM_ParityGateLevel(benchmark::State& state) {
  const auto s = qwell::BitString6::parse("010101");
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::run_parity_algorithm(s));
  }
}
BENCHMARK(BM_ParityGateLevel);

void BM_ParityPulseLevel(benchmark::State& state) {
  const auto s = qwell::BitString6::parse("010101");
  const auto dipole = qwell::dipole_matrix(states());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwell::run_parity_algorithm(s, dipole));
  }
}
BENCHMARK(BM_ParityPulseLevel);

}  // namespace

BENCHMARK_MAIN();
