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

#include "qwell/well.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinKa = 1e-2;  // below this the single bound state is numerically degenerate

// Both branch equations are written in u = k a / 2 with u_max = K a / 2:
//   even:  u tan(u) = sqrt(u_max^2 - u^2)
//   odd : -u cot(u) = sqrt(u_max^2 - u^2)
// Each branch is monotone increasing between its poles, so every interval
// below holds exactly one root.
struct Branch {
  Parity parity;
  double lo, hi;  // bracketing interval in u
};

double branch_function(double u, double u_max, Parity parity) {
  const double rest = std::sqrt(std::max(u_max * u_max - u * u, 0.0));
  if (parity == Parity::even) return u * std::tan(u) - rest;
  return -u / std::tan(u) - rest;
}

double branch_derivative(double u, double u_max, Parity parity) {
  const double rest_sq = std::max(u_max * u_max - u * u, 0.0);
  const double rest = std::sqrt(rest_sq);
  const double tail = rest > 0.0 ? u / rest : 0.0;
  if (parity == Parity::even) {
    const double t = std::tan(u);
    return t + u * (1.0 + t * t) + tail;
  }
  const double ct = 1.0 / std::tan(u);
  return -ct + u * (1.0 + ct * ct) + tail;
}

// Bisection to |du| < 0.5e-13 * a (i.e. |dk| < 1e-13), then a few bounded
// Newton steps. Bisection alone leaves branch residuals ~|f'| * 1e-13,
// which for deep wells (|f'| ~ 1e4) misses the 1e-10 residual target.
double solve_branch(double lo, double hi, double u_max, Parity parity, double width) {
  const double du_tol = 0.5e-13 * width;
  double flo = branch_function(lo, u_max, parity);
  if (flo > 0.0) return lo;  // degenerate bracket; cannot happen away from thresholds
  for (int it = 0; it < 200 && hi - lo > du_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // floating-point fixpoint
    if (branch_function(mid, u_max, parity) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double f = branch_function(u, u_max, parity);
    const double fp = branch_derivative(u, u_max, parity);
    if (!std::isfinite(f) || !std::isfinite(fp) || fp == 0.0) break;
    const double next = u - f / fp;
    if (next <= lo || next >= hi) break;
    u = next;
  }
  return u;
}

}  // namespace

double WellSpec::wavenumber_scale() const { return std::sqrt(2.0 * mass * depth); }

int WellSpec::predicted_bound_states() const {
  return static_cast<int>(std::ceil(wavenumber_scale() * width / kPi));
}

std::vector<BoundState> solve_bound_states(const WellSpec& spec) {
  if (!(spec.depth > 0.0) || !(spec.width > 0.0) || !(spec.mass > 0.0)) {
    throw NoBoundStates("solve_bound_states: depth, width and mass must be positive");
  }
  const double K = spec.wavenumber_scale();
  const double a = spec.width;
  if (K * a < kMinKa) {
    throw NoBoundStates("solve_bound_states: K a = " + std::to_string(K * a) +
                        " below the resolvable threshold " + std::to_string(kMinKa));
  }
  const double u_max = K * a / 2.0;

  // Brackets interleave: even roots in (j pi, j pi + pi/2), odd roots in
  // (j pi + pi/2, (j+1) pi); sorting by u gives alternating parity.
  std::vector<Branch> branches;
  for (int j = 0; j * kPi < u_max; ++j) {
    branches.push_back({Parity::even, j * kPi, std::min(j * kPi + kPi / 2.0, u_max)});
  }
  for (int j = 0; j * kPi + kPi / 2.0 < u_max; ++j) {
    branches.push_back({Parity::odd, j * kPi + kPi / 2.0, std::min((j + 1) * kPi, u_max)});
  }
  std::sort(branches.begin(), branches.end(),
            [](const Branch& x, const Branch& y) { return x.lo < y.lo; });

  std::vector<BoundState> states;
  states.reserve(branches.size());
  for (const Branch& br : branches) {
    const double pad = 1e-14 * std::max(1.0, br.hi);
    const double u = solve_branch(br.lo + pad, br.hi - pad, u_max, br.parity, a);
    const double k = 2.0 * u / a;
    const double kappa = std::sqrt(std::max(K * K - k * k, 0.0));

    BoundState st;
    st.n = static_cast<int>(states.size()) + 1;
    st.parity = br.parity;
    st.k = k;
    st.kappa = kappa;
    st.energy = k * k / (2.0 * spec.mass) - spec.depth;
    st.half_width = a / 2.0;
    // Closed-form L2 normalization: the inside trig integral plus the
    // exponential tails referenced to the well edge.
    if (br.parity == Parity::even) {
      const double inside = a / 2.0 + std::sin(k * a) / (2.0 * k);
      const double edge = std::cos(u);
      st.amp_in = 1.0 / std::sqrt(inside + edge * edge / kappa);
      st.amp_edge = st.amp_in * edge;
    } else {
      const double inside = a / 2.0 - std::sin(k * a) / (2.0 * k);
      const double edge = std::sin(u);
      st.amp_in = 1.0 / std::sqrt(inside + edge * edge / kappa);
      st.amp_edge = st.amp_in * edge;
    }
    states.push_back(st);
  }
  return states;
}

double wavefunction(const BoundState& state, double x) {
  const double L = state.half_width;
  const double ax = std::abs(x);
  if (ax <= L) {
    return state.parity == Parity::even ? state.amp_in * std::cos(state.k * x)
                                        : state.amp_in * std::sin(state.k * x);
  }
  const double tail = state.amp_edge * std::exp(-state.kappa * (ax - L));
  if (state.parity == Parity::even) return tail;
  return x > 0.0 ? tail : -tail;
}

DipoleMatrix::DipoleMatrix(int levels)
    : n_(levels), d_(static_cast<size_t>(levels) * levels, 0.0) {
  if (levels < 1) throw DimensionMismatch("DipoleMatrix: level count must be positive");
}

double DipoleMatrix::at(int n, int m) const {
  if (n < 1 || n > n_ || m < 1 || m > n_) {
    throw BadLevels("DipoleMatrix::at: levels " + std::to_string(n) + "," + std::to_string(m) +
                    " outside 1.." + std::to_string(n_));
  }
  return d_[static_cast<size_t>(n - 1) * n_ + (m - 1)];
}

double& DipoleMatrix::at(int n, int m) {
  if (n < 1 || n > n_ || m < 1 || m > n_) {
    throw BadLevels("DipoleMatrix::at: levels " + std::to_string(n) + "," + std::to_string(m) +
                    " outside 1.." + std::to_string(n_));
  }
  return d_[static_cast<size_t>(n - 1) * n_ + (m - 1)];
}

namespace {

// int_0^L x sin(c x) dx, series form near c = 0.
double x_sin_integral(double c, double L) {
  if (std::abs(c * L) < 1e-4) {
    const double cl = c * L;
    return c * L * L * L * (1.0 / 3.0 - cl * cl / 30.0);
  }
  return (std::sin(c * L) - c * L * std::cos(c * L)) / (c * c);
}

// int_L^inf x e1 e2 exp(-sigma (x - L)) dx with edge values e1, e2.
double tail_integral(double e1, double e2, double sigma, double L) {
  return e1 * e2 * (L / sigma + 1.0 / (sigma * sigma));
}

}  // namespace

DipoleMatrix dipole_matrix(std::span<const BoundState> states) {
  DipoleMatrix d(static_cast<int>(states.size()));
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i + 1; j < states.size(); ++j) {
      const BoundState& si = states[i];
      const BoundState& sj = states[j];
      if (si.parity == sj.parity) continue;  // odd integrand, exact zero
      const BoundState& ev = si.parity == Parity::even ? si : sj;
      const BoundState& od = si.parity == Parity::even ? sj : si;
      const double L = ev.half_width;
      // Inside: x cos(k_e x) sin(k_o x) = x [sin((k_e+k_o)x) - sin((k_e-k_o)x)] / 2.
      const double inner = 0.5 * ev.amp_in * od.amp_in *
                           (x_sin_integral(ev.k + od.k, L) - x_sin_integral(ev.k - od.k, L));
      const double tail = tail_integral(ev.amp_edge, od.amp_edge, ev.kappa + od.kappa, L);
      // The integrand x psi_e psi_o is even, so both half-lines contribute equally.
      const double value = 2.0 * (inner + tail);
      d.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = value;
      d.at(static_cast<int>(j) + 1, static_cast<int>(i) + 1) = value;
    }
  }
  return d;
}

}  // namespace qwell
