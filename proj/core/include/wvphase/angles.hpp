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

#include <cmath>
#include <numbers>

namespace wvphase {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle onto (-pi, pi].
inline double wrap_to_pi(double angle) {
  double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Maps an angle onto [0, 2pi).
inline double wrap_to_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r == 0.0 ? 0.0 : r;
}

/// Shortest distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

inline double to_degrees(double radians) { return radians * 180.0 / kPi; }

}  // namespace wvphase
