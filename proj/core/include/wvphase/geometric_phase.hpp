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

#include <span>
#include <utility>
#include <vector>

#include "wvphase/linalg.hpp"
#include "wvphase/weak_values.hpp"

namespace wvphase {

// Sign convention: the geometric phase of a closed ray-space polyline is
// minus the argument of the product of its consecutive overlaps, so for a
// geodesic triangle phi_g = -arg Delta3.

struct BargmannInvariant {
  int order = 0;
  Complex value;
  double argument = 0.0;  ///< (-pi, pi]
  /// Some consecutive overlap fell below the floor; value ~ 0 and the
  /// argument carries no information.
  bool degenerate = false;
};

/// <s1|s2><s2|s3>...<sn|s1>. Requires at least three states of equal
/// dimension.
BargmannInvariant bargmann(std::span<const Ket> states, double overlap_floor = kDefaultOverlapFloor);
BargmannInvariant bargmann(const Ket& a, const Ket& b, const Ket& c,
                           double overlap_floor = kDefaultOverlapFloor);

struct GeodesicPath {
  std::pair<Ket, Ket> endpoints;
  std::vector<Ket> samples;  ///< n+1 points, consecutive overlaps real positive
};

/// Shorter ray-space geodesic from a to b sampled at n+1 points. The far
/// endpoint is phase-aligned so that <a|b> > 0 before interpolating.
GeodesicPath geodesic(const Ket& a, const Ket& b, int n, double overlap_floor = kDefaultOverlapFloor);

/// -arg prod_k <p_k|p_{k+1}> with cyclic indices, in (-pi, pi].
double polyline_phase(std::span<const Ket> closed_path, double overlap_floor = kDefaultOverlapFloor);

/// Geometric phase of the triangle a -> b -> c -> a with geodesic sides of n
/// segments each.
double geodesic_triangle_phase(const Ket& a, const Ket& b, const Ket& c, int n,
                               double overlap_floor = kDefaultOverlapFloor);

/// |arg Delta3(a,b,c)| <= tol. Throws DomainError if any pair is orthogonal.
bool is_null_phase(const Ket& a, const Ket& b, const Ket& c, double tol,
                   double overlap_floor = kDefaultOverlapFloor);

/// Whether |omega><omega| has weak-value argument \p target (within \p tol,
/// measured on the circle) for the given pre- and post-selection.
bool constant_phase_membership(const Ket& pre, const Ket& post, const Ket& omega, double target, double tol,
                               double overlap_floor = kDefaultOverlapFloor);

}  // namespace wvphase
