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

// Command-line front end: reproducible experiments on the seven-level
// square-well system with file outputs. Data goes to --out (or standard
// output); diagnostics and errors go to the error stream.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwell/encodings.hpp"
#include "qwell/pulse_gates.hpp"
#include "qwell/spectral.hpp"
#include "qwell/thermal.hpp"
#include "qwell/well.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
  file << text;
}

struct WellOptions {
  double depth = 200.0;
  double width = 1.0;
  double mass = 1.0;

  qwell::WellSpec spec() const { return qwell::WellSpec{depth, width, mass}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--depth", depth, "Well depth (positive magnitude)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--width", width, "Well width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--mass", mass, "Particle mass")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
};

json state_to_json(const qwell::BoundState& st) {
  json j;
  j["n"] = st.n;
  j["E"] = st.energy;
  j["parity"] = st.parity == qwell::Parity::even ? "even" : "odd";
  j["k"] = st.k;
  j["kappa"] = st.kappa;
  return j;
}

json matrix_to_json(const qwell::ComplexMatrix& m) {
  // Flat row-major list of [re, im] pairs.
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) rows.push_back({m(r, c).real(), m(r, c).imag()});
  return rows;
}

json schedule_to_json(const qwell::PulseSchedule& sched, const qwell::DipoleMatrix& dipole) {
  json pulses = json::array();
  for (const qwell::Pulse& p : sched.pulses) {
    json jp;
    jp["n"] = p.n;
    jp["m"] = p.m;
    jp["theta"] = p.theta;
    jp["duration"] = qwell::pulse_duration(p, dipole);
    pulses.push_back(jp);
  }
  return pulses;
}

int cmd_solve_well(const WellOptions& well, const std::string& out_path) {
  const auto states = qwell::solve_bound_states(well.spec());
  const auto dipole = qwell::dipole_matrix(states);

  json j;
  j["states"] = json::array();
  for (const auto& st : states) j["states"].push_back(state_to_json(st));
  j["dipole"] = json::array();
  for (int n = 1; n <= dipole.levels(); ++n) {
    json row = json::array();
    for (int m = 1; m <= dipole.levels(); ++m) row.push_back(dipole.at(n, m));
    j["dipole"].push_back(row);
  }
  write_output(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_thermal_sweep(const WellOptions& well, double tmin, double tmax, int points,
                      const std::string& format, const std::string& out_path) {
  if (!(tmin > 0.0) || !(tmax > tmin)) {
    throw std::invalid_argument("thermal-sweep: need 0 < tmin < tmax");
  }
  if (points < 2) throw std::invalid_argument("thermal-sweep: need at least 2 grid points");

  const auto states = qwell::solve_bound_states(well.spec());
  std::vector<double> energies;
  for (const auto& st : states) energies.push_back(st.energy);
  if (energies.size() != 7) {
    throw std::invalid_argument("thermal-sweep: the well must hold exactly 7 bound states, got " +
                                std::to_string(energies.size()));
  }

  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<size_t>(i)] = tmin + (tmax - tmin) * static_cast<double>(i) / (points - 1);
  }
  const auto records = qwell::information_sweep(energies, grid);

  const double leak = qwell::continuum_occupation_estimate(energies, grid.back());
  if (leak > 0.01) {
    std::cerr << "warning: at T = " << fmt12(grid.back()) << " a continuum-edge level would hold "
              << fmt12(100.0 * leak) << "% population; bound-state truncation is dubious there\n";
  }

  std::string text;
  if (format == "csv") {
    std::ostringstream csv;
    csv << "T,I_AB,I_AC,I_BC,I_AB_given_C,I_AC_given_B,I_BC_given_A\n";
    for (const auto& r : records) {
      csv << fmt12(r.T) << ',' << fmt12(r.I_AB) << ',' << fmt12(r.I_AC) << ',' << fmt12(r.I_BC)
          << ',' << fmt12(r.I_AB_given_C) << ',' << fmt12(r.I_AC_given_B) << ','
          << fmt12(r.I_BC_given_A) << '\n';
    }
    text = csv.str();
  } else {
    json rows = json::array();
    for (const auto& r : records) {
      json jr;
      jr["T"] = r.T;
      jr["I_AB"] = r.I_AB;
      jr["I_AC"] = r.I_AC;
      jr["I_BC"] = r.I_BC;
      jr["I_AB_given_C"] = r.I_AB_given_C;
      jr["I_AC_given_B"] = r.I_AC_given_B;
      jr["I_BC_given_A"] = r.I_BC_given_A;
      rows.push_back(jr);
    }
    text = rows.dump(2) + "\n";
  }
  write_output(text, out_path);
  return 0;
}

std::vector<qwell::BoundState> solve_seven_levels(const WellOptions& well, const char* who) {
  auto states = qwell::solve_bound_states(well.spec());
  if (states.size() != 7) {
    throw std::invalid_argument(std::string(who) +
                                ": the well must hold exactly 7 bound states, got " +
                                std::to_string(states.size()));
  }
  return states;
}

int cmd_parity(const WellOptions& well, const std::string& bits, const std::string& level,
               const std::string& out_path) {
  const qwell::BitString6 s = qwell::BitString6::parse(bits);

  qwell::ParityRun run;
  if (level == "pulse") {
    const auto states = solve_seven_levels(well, "parity");
    const auto dipole = qwell::dipole_matrix(states);
    run = qwell::run_parity_algorithm(s, dipole);
  } else {
    run = qwell::run_parity_algorithm(s);
  }

  std::ostringstream report;
  report << "string: " << s.str() << "\n"
         << "level: " << level << "\n"
         << "outcome: " << run.outcome << "\n"
         << "global phase: " << (run.global_phase > 0 ? "+1" : "-1") << "\n"
         << "oracle queries: " << run.oracle_queries << "\n"
         << "final state amplitudes (level: re im):\n";
  for (int lvl = 1; lvl <= 7; ++lvl) {
    const qwell::Complex c = run.final_state.amp[static_cast<size_t>(lvl - 1)];
    report << "  " << lvl << ": " << fmt12(c.real()) << " " << fmt12(c.imag()) << "\n";
  }
  std::cout << report.str();

  if (!out_path.empty()) {
    json j;
    j["string"] = s.str();
    j["level"] = level;
    j["outcome"] = run.outcome;
    j["global_phase"] = run.global_phase;
    j["oracle_queries"] = run.oracle_queries;
    json amps = json::array();
    for (const auto& c : run.final_state.amp) amps.push_back({c.real(), c.imag()});
    j["amplitudes"] = amps;
    write_output(j.dump(2) + "\n", out_path);
  }
  return 0;
}

int cmd_gates_dump(const WellOptions& well, const std::string& out_path) {
  const auto states = solve_seven_levels(well, "gates-dump");
  const auto dipole = qwell::dipole_matrix(states);
  const auto lib = qwell::gate_library();

  auto gate_to_json = [&](const qwell::Gate& g) {
    json j;
    j["name"] = g.name;
    j["matrix"] = matrix_to_json(g.matrix);
    j["schedule"] = schedule_to_json(g.schedule, dipole);
    j["global_phase"] = g.global_phase;
    return j;
  };

  json j;
  j["gates"] = json::array();
  j["gates"].push_back(gate_to_json(lib.hadamard));
  j["gates"].push_back(gate_to_json(lib.swap01));
  j["gates"].push_back(gate_to_json(lib.swap12));
  for (const auto& z : lib.z) j["gates"].push_back(gate_to_json(z));
  j["gates"].push_back(gate_to_json(lib.sigma_z));
  write_output(j.dump(2) + "\n", out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the built-in invariant suite.

struct CheckGroup {
  std::string name;
  int passed = 0;
  int failed = 0;

  void expect(bool ok) { ok ? ++passed : ++failed; }
};

int cmd_verify(const WellOptions& well) {
  using qwell::BitString6;
  using qwell::ComplexMatrix;
  using qwell::Subsystem;

  std::vector<CheckGroup> groups;
  const auto states = solve_seven_levels(well, "verify");
  const auto dipole = qwell::dipole_matrix(states);
  const auto lib = qwell::gate_library();

  {
    CheckGroup g{"unitarity of rotations, gates and oracles"};
    for (int n = 1; n < 7; ++n) {
      for (int m = n + 1; m <= 7; ++m) {
        g.expect(qwell::is_unitary(qwell::rotation(n, m, 0.37 * n + 1.11 * m), 1e-12));
      }
    }
    g.expect(qwell::is_unitary(lib.hadamard.matrix, 1e-12));
    g.expect(qwell::is_unitary(lib.swap01.matrix, 1e-12));
    g.expect(qwell::is_unitary(lib.swap12.matrix, 1e-12));
    for (const auto& z : lib.z) g.expect(qwell::is_unitary(z.matrix, 1e-12));
    for (unsigned v = 0; v < 64; ++v) {
      g.expect(qwell::is_unitary(qwell::parity_oracle(BitString6::from_index(v)), 1e-12));
    }
    groups.push_back(g);
  }

  {
    CheckGroup g{"subadditivity and strong subadditivity over the thermal sweep"};
    std::vector<double> energies;
    for (const auto& st : states) energies.push_back(st.energy);
    const auto records = qwell::information_sweep(energies, qwell::default_temperature_grid());
    for (const auto& r : records) {
      g.expect(r.I_AB >= -1e-9);
      g.expect(r.I_AC >= -1e-9);
      g.expect(r.I_BC >= -1e-9);
      g.expect(r.I_AB_given_C >= -1e-9);
      g.expect(r.I_AC_given_B >= -1e-9);
      g.expect(r.I_BC_given_A >= -1e-9);
    }
    groups.push_back(g);
  }

  {
    CheckGroup g{"parity algorithm, all 64 strings, gate vs pulse"};
    for (unsigned v = 0; v < 64; ++v) {
      const BitString6 s = BitString6::from_index(v);
      int xor_parity = 0;
      for (int n = 1; n <= 6; ++n) xor_parity ^= s.bit(n);

      const auto gate_run = qwell::run_parity_algorithm(s);
      g.expect(gate_run.outcome == xor_parity);
      g.expect(gate_run.oracle_queries == 3);
      g.expect(gate_run.global_phase == ((s.bit(1) ^ s.bit(3) ^ s.bit(5)) ? -1 : 1));

      const int target = xor_parity ? 6 : 5;
      double off_target = 0.0;
      for (int lvl = 1; lvl <= 7; ++lvl) {
        if (lvl != target) off_target += gate_run.final_state.population(lvl);
      }
      g.expect(off_target < 1e-10);

      const auto pulse_run = qwell::run_parity_algorithm(s, dipole);
      double diff = 0.0;
      for (size_t i = 0; i < 7; ++i) {
        diff = std::max(diff,
                        std::abs(pulse_run.final_state.amp[i] - gate_run.final_state.amp[i]));
      }
      g.expect(diff < 1e-9);
      g.expect(std::abs(qwell::measure_parity_observable(gate_run.final_state) -
                        (1.0 - 2.0 * xor_parity)) < 1e-10);
    }
    groups.push_back(g);
  }

  {
    CheckGroup g{"gate schedules reproduce the explicit forms"};
    auto matches = [](const qwell::Gate& gate) {
      ComplexMatrix reference = gate.matrix;
      reference *= qwell::Complex{static_cast<double>(gate.global_phase), 0.0};
      return qwell::max_abs_diff(qwell::schedule_unitary(gate.schedule), reference) < 1e-10;
    };
    g.expect(matches(lib.hadamard));
    g.expect(matches(lib.swap01));
    g.expect(matches(lib.swap12));
    for (int n : {1, 3, 6}) g.expect(matches(lib.z[static_cast<size_t>(n - 1)]));
    groups.push_back(g);
  }

  {
    CheckGroup g{"oracle signs equal the Z-gate products, exactly"};
    for (unsigned v = 0; v < 64; ++v) {
      const BitString6 s = BitString6::from_index(v);
      ComplexMatrix product = ComplexMatrix::identity(7);
      for (int n = 1; n <= 6; ++n) {
        if (s.bit(n)) product = lib.z[static_cast<size_t>(n - 1)].matrix * product;
      }
      g.expect(qwell::max_abs_diff(qwell::parity_oracle(s), product) == 0.0);
    }
    groups.push_back(g);
  }

  int total_passed = 0, total_failed = 0;
  for (const auto& g : groups) {
    total_passed += g.passed;
    total_failed += g.failed;
    std::cout << (g.failed == 0 ? "[ok]   " : "[FAIL] ") << g.name << " (" << g.passed << "/"
              << (g.passed + g.failed) << " checks)\n";
  }
  std::cout << "verify: " << total_passed << "/" << (total_passed + total_failed)
            << " checks passed\n";
  return total_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seven-level square-well quantum information laboratory"};
  app.require_subcommand(1);

  WellOptions well;
  std::string out_path;
  std::string format = "csv";
  std::string bits;
  std::string level = "gate";
  double tmin = 0.1, tmax = 50.0;
  int points = 200;

  CLI::App* solve = app.add_subcommand("solve-well", "Bound states and dipole matrix as JSON");
  well.attach(solve);
  solve->add_option("--out", out_path, "Output file (default: standard output)");

  CLI::App* sweep = app.add_subcommand(
      "thermal-sweep", "Mutual and conditional mutual information of the thermal state");
  well.attach(sweep);
  sweep->add_option("--tmin", tmin, "Lowest temperature")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--tmax", tmax, "Highest temperature")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--points", points, "Grid size")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "Output file (default: standard output)");

  CLI::App* parity = app.add_subcommand("parity", "Run the single-qudit parity-check algorithm");
  well.attach(parity);
  parity->add_option("--string", bits, "Six-bit string, e.g. 010101")->required();
  parity->add_option("--level", level, "Simulation level")
      ->check(CLI::IsMember({"gate", "pulse"}))
      ->capture_default_str();
  parity->add_option("--out", out_path, "Optional JSON report file");

  CLI::App* gates = app.add_subcommand("gates-dump",
                                       "Gate matrices, pulse schedules and global phases");
  well.attach(gates);
  gates->add_option("--out", out_path, "Output file (default: standard output)");

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in invariant suite");
  well.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve_well(well, out_path);
    if (sweep->parsed()) return cmd_thermal_sweep(well, tmin, tmax, points, format, out_path);
    if (parity->parsed()) return cmd_parity(well, bits, level, out_path);
    if (gates->parsed()) return cmd_gates_dump(well, out_path);
    if (verify->parsed()) return cmd_verify(well);
  } catch (const qwell::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
