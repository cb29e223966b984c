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
#pragma once

#include <utility>
#include <vector>

#include "wvphase/linalg.hpp"
#include "wvphase/weak_values.hpp"

namespace wvphase {

/// Largest coupling accepted as "weak", in units of the pointer spread.
inline constexpr double kMaxWeakCoupling = 0.05;
/// Tail coverage required on both sides of the displaced Gaussians, in sigmas.
inline constexpr double kGridTailSigmas = 8.0;
inline constexpr int kDefaultGridPoints = 4096;

/// Uniform grid x_i = x_min + i * spacing(), i = 0..n-1, x_{n-1} = x_max.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;

  double spacing() const { return (x_max - x_min) / (n - 1); }
  double x(int i) const { return x_min + i * spacing(); }
};

/// [-8 sigma, 8 sigma + g] with 4096 points.
Grid default_grid(double sigma, double g);

/// Pointer wavefunction sampled on a grid (units with hbar = 1).
struct PointerState {
  double sigma = 1.0;
  Grid grid;
  std::vector<Complex> amplitudes;  ///< trapezoid-normalized
  double norm_sq = 1.0;             ///< squared norm before renormalization
};

/// phi0(x - center) exp(i k x), phi0(x) = (2 pi sigma^2)^{-1/4} exp(-x^2 / (4 sigma^2)).
PointerState gaussian_pointer(double sigma, const Grid& grid, double center = 0.0, double wavenumber = 0.0);

/// Amplitudes of the two pointer branches after coupling to a rank-1
/// projector and post-selecting: c0 = <post|pre> - <post|P|pre> (pointer
/// not displaced), c1 = <post|P|pre> (pointer displaced by g).
std::pair<Complex, Complex> coupling_amplitudes(const Ket& pi_axis, const Ket& pre, const Ket& post);

/// Exact pointer state after exp(-i g P (x) p) and post-selection:
/// phi_f(x) = c0 phi0(x) + c1 phi0(x - g). norm_sq is the joint probability
/// of the post-selection, |c0|^2 + |c1|^2 + 2 Re(c0* c1) exp(-g^2 / (8 sigma^2)).
///
/// Throws ValidationError if g < 0, sigma <= 0, or the grid does not extend
/// 8 sigma beyond both displaced Gaussians; DomainError on orthogonal
/// selection.
PointerState couple_and_postselect(const Ket& pi_axis, const Ket& pre, const Ket& post, double g, double sigma,
                                   const Grid& grid, double overlap_floor = kDefaultOverlapFloor);

struct PointerMeans {
  double mean_x = 0.0;
  double mean_p = 0.0;
};

/// Trapezoid quadrature of x|phi|^2 and of Im[phi* dphi/dx] (fourth-order
/// central differences in the interior), each divided by the quadrature norm.
PointerMeans pointer_means(const PointerState& state);

struct WeakLimitEstimate {
  double re = 0.0;  ///< mean_x / g
  double im = 0.0;  ///< 2 sigma^2 mean_p / g
};

/// First-order readout of the weak value from the exact coupled pointer.
/// Requires 0 < g <= 0.05 sigma. Uses default_grid(sigma, g) unless a grid is
/// given.
WeakLimitEstimate weak_limit_estimate(const Ket& pi_axis, const Ket& pre, const Ket& post, double sigma, double g);
WeakLimitEstimate weak_limit_estimate(const Ket& pi_axis, const Ket& pre, const Ket& post, double sigma, double g,
                                      const Grid& grid);

void validate_grid(const Grid& grid);

}  // namespace wvphase
