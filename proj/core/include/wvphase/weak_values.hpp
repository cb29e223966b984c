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

#include <optional>
#include <span>
#include <vector>

#include "wvphase/linalg.hpp"

namespace wvphase {

/// Post-selection probabilities at or below this floor are rejected.
inline constexpr double kDefaultOverlapFloor = 1e-12;

struct WeakValueResult {
  Complex value;
  double modulus = 0.0;
  double argument = 0.0;  ///< (-pi, pi]
  /// <post|omega><omega|pre><pre|post>; only set for projector observables.
  std::optional<Complex> bargmann3;
  double postselect_prob = 0.0;  ///< |<post|pre>|^2
};

/// A|psi> = mean |psi> + spread |residual>, residual orthogonal to psi.
struct ActionDecomposition {
  double mean = 0.0;
  double spread = 0.0;
  std::optional<Ket> residual;  ///< absent when psi is an eigenstate
};

/// <post|A|pre> / <post|pre>.
///
/// Throws DomainError("undefined weak value: orthogonal selection") when
/// |<post|pre>|^2 <= overlap_floor, ValidationError on dimension mismatch.
WeakValueResult weak_value(const HermitianOperator& a, const Ket& pre, const Ket& post,
                           double overlap_floor = kDefaultOverlapFloor);

/// Weak value of |omega><omega|, computed as the third-order Bargmann
/// invariant divided by the post-selection probability. Its argument is the
/// argument of the invariant.
WeakValueResult projector_weak_value(const Ket& omega, const Ket& pre, const Ket& post,
                                     double overlap_floor = kDefaultOverlapFloor);

/// sum_b Re[<b|A|pre>/<b|pre>] |<b|pre>|^2 over an orthonormal basis; equals
/// <pre|A|pre>. Terms with |<b|pre>|^2 below the floor carry no weight and are
/// skipped. Throws ValidationError if the basis is not orthonormal and
/// complete within 1e-10.
double expectation_from_weak_values(const HermitianOperator& a, const Ket& pre,
                                    std::span<const Ket> basis,
                                    double overlap_floor = kDefaultOverlapFloor);

ActionDecomposition decompose_action(const HermitianOperator& a, const Ket& psi);

/// <post|residual> / <post|pre>; zero when pre is an eigenstate of A.
Complex decomposition_ratio(const HermitianOperator& a, const Ket& pre, const Ket& post,
                            double overlap_floor = kDefaultOverlapFloor);

/// <A> + dA * <post|residual>/<post|pre>. Same value as weak_value(), reached
/// through the mean/spread split of A|pre>.
Complex weak_value_via_decomposition(const HermitianOperator& a, const Ket& pre, const Ket& post,
                                     double overlap_floor = kDefaultOverlapFloor);

}  // namespace wvphase
