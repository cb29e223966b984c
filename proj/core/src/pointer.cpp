// Copyright 2026 The wvphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "wvphase/pointer.hpp"

#include <cmath>
#include <string>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"

namespace wvphase {

namespace {

double gaussian(double x, double sigma) {
  return std::pow(kTwoPi * sigma * sigma, -0.25) * std::exp(-x * x / (4.0 * sigma * sigma));
}

double trapezoid_norm_sq(const std::vector<Complex>& amps, double dx) {
  double s = 0.0;
  for (const auto& z : amps) s += std::norm(z);
  s -= 0.5 * (std::norm(amps.front()) + std::norm(amps.back()));
  return s * dx;
}

void renormalize(std::vector<Complex>& amps, double dx) {
  const double n2 = trapezoid_norm_sq(amps, dx);
  if (!(n2 > 0.0)) throw DomainError("pointer state vanishes on the grid");
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : amps) z *= scale;
}

}  // namespace

void validate_grid(const Grid& grid) {
  if (grid.n < 3) throw ValidationError("grid needs at least 3 points");
  if (!std::isfinite(grid.x_min) || !std::isfinite(grid.x_max) || !(grid.x_max > grid.x_min)) {
    throw ValidationError("grid needs finite bounds with x_max > x_min");
  }
}

Grid default_grid(double sigma, double g) {
  return Grid{-kGridTailSigmas * sigma, kGridTailSigmas * sigma + g, kDefaultGridPoints};
}

PointerState gaussian_pointer(double sigma, const Grid& grid, double center, double wavenumber) {
  validate_grid(grid);
  if (!(sigma > 0.0)) throw ValidationError("pointer spread sigma must be > 0");
  PointerState state;
  state.sigma = sigma;
  state.grid = grid;
  state.amplitudes.resize(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    state.amplitudes[static_cast<std::size_t>(i)] = gaussian(x - center, sigma) * std::polar(1.0, wavenumber * x);
  }
  state.norm_sq = trapezoid_norm_sq(state.amplitudes, grid.spacing());
  renormalize(state.amplitudes, grid.spacing());
  return state;
}

std::pair<Complex, Complex> coupling_amplitudes(const Ket& pi_axis, const Ket& pre, const Ket& post) {
  if (pi_axis.dim() != pre.dim() || pre.dim() != post.dim()) {
    throw ValidationError("dimension mismatch between projector axis, pre- and post-selected states");
  }
  const Complex c1 = inner(post, pi_axis) * inner(pi_axis, pre);
  const Complex c0 = inner(post, pre) - c1;
  return {c0, c1};
}

PointerState couple_and_postselect(const Ket& pi_axis, const Ket& pre, const Ket& post, double g, double sigma,
                                   const Grid& grid, double overlap_floor) {
  validate_grid(grid);
  if (!(g >= 0.0) || !std::isfinite(g)) throw ValidationError("coupling g must be >= 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ValidationError("pointer spread sigma must be > 0");
  const double slack = 1e-9 * sigma;
  if (grid.x_min > -kGridTailSigmas * sigma + slack || grid.x_max < g + kGridTailSigmas * sigma - slack) {
    throw ValidationError("grid too small for displacement g: need x_min <= -8 sigma and x_max >= g + 8 sigma");
  }
  const auto [c0, c1] = coupling_amplitudes(pi_axis, pre, post);
  if (!(std::norm(c0 + c1) > overlap_floor)) {
    throw DomainError("undefined weak value: orthogonal selection");
  }

  PointerState state;
  state.sigma = sigma;
  state.grid = grid;
  state.amplitudes.resize(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    state.amplitudes[static_cast<std::size_t>(i)] = c0 * gaussian(x, sigma) + c1 * gaussian(x - g, sigma);
  }
  const double branch_overlap = std::exp(-g * g / (8.0 * sigma * sigma));
  state.norm_sq = std::norm(c0) + std::norm(c1) + 2.0 * (std::conj(c0) * c1).real() * branch_overlap;
  renormalize(state.amplitudes, grid.spacing());
  return state;
}

PointerMeans pointer_means(const PointerState& state) {
  const auto& phi = state.amplitudes;
  const int n = state.grid.n;
  const double dx = state.grid.spacing();
  if (static_cast<int>(phi.size()) != n) throw ValidationError("pointer amplitudes do not match the grid");

  double weight = 0.0, first = 0.0, current = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    const std::size_t u = static_cast<std::size_t>(i);
    Complex derivative;
    if (i == 0) {
      derivative = (phi[1] - phi[0]) / dx;
    } else if (i == n - 1) {
      derivative = (phi[u] - phi[u - 1]) / dx;
    } else if (i == 1 || i == n - 2) {
      derivative = (phi[u + 1] - phi[u - 1]) / (2.0 * dx);
    } else {
      derivative = (8.0 * (phi[u + 1] - phi[u - 1]) - (phi[u + 2] - phi[u - 2])) / (12.0 * dx);
    }
    const double density = std::norm(phi[u]);
    weight += w * density;
    first += w * state.grid.x(i) * density;
    current += w * (std::conj(phi[u]) * derivative).imag();
  }
  return {first / weight, current / weight};
}

WeakLimitEstimate weak_limit_estimate(const Ket& pi_axis, const Ket& pre, const Ket& post, double sigma, double g) {
  return weak_limit_estimate(pi_axis, pre, post, sigma, g, default_grid(sigma, g));
}

WeakLimitEstimate weak_limit_estimate(const Ket& pi_axis, const Ket& pre, const Ket& post, double sigma, double g,
                                      const Grid& grid) {
  if (!(sigma > 0.0)) throw ValidationError("pointer spread sigma must be > 0");
  if (!(g > 0.0) || g > kMaxWeakCoupling * sigma * (1.0 + 1e-12)) {
    throw ValidationError("weak coupling requires 0 < g <= 0.05 sigma, got g/sigma = " + std::to_string(g / sigma));
  }
  const PointerState state = couple_and_postselect(pi_axis, pre, post, g, sigma, grid);
  const PointerMeans means = pointer_means(state);
  return {means.mean_x / g, 2.0 * sigma * sigma * means.mean_p / g};
}

}  // namespace wvphase
