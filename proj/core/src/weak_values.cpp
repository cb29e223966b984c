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
#include "wvphase/weak_values.hpp"

#include <cmath>
#include <string>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"

namespace wvphase {

namespace {

void require_dims(std::size_t d, const Ket& k, const char* role) {
  if (k.dim() != d) {
    throw ValidationError(std::string("dimension mismatch: ") + role + " has dim " + std::to_string(k.dim()) +
                          ", expected " + std::to_string(d));
  }
}

// Returns <post|pre> after checking the post-selection is not orthogonal.
Complex selection_overlap(const Ket& pre, const Ket& post, double overlap_floor) {
  require_dims(pre.dim(), post, "post-selected state");
  const Complex overlap = inner(post, pre);
  if (!(std::norm(overlap) > overlap_floor)) {
    throw DomainError("undefined weak value: orthogonal selection (|<post|pre>|^2 = " +
                      std::to_string(std::norm(overlap)) + ")");
  }
  return overlap;
}

WeakValueResult polar(Complex value, double postselect_prob) {
  WeakValueResult r;
  r.value = value;
  r.modulus = std::abs(value);
  r.argument = wrap_to_pi(std::arg(value));
  r.postselect_prob = postselect_prob;
  return r;
}

}  // namespace

WeakValueResult weak_value(const HermitianOperator& a, const Ket& pre, const Ket& post, double overlap_floor) {
  require_dims(a.dim(), pre, "pre-selected state");
  const Complex overlap = selection_overlap(pre, post, overlap_floor);
  const Complex numerator = inner(post.amplitudes(), apply(a.matrix(), pre));
  return polar(numerator / overlap, std::norm(overlap));
}

WeakValueResult projector_weak_value(const Ket& omega, const Ket& pre, const Ket& post, double overlap_floor) {
  require_dims(omega.dim(), pre, "pre-selected state");
  const Complex overlap = selection_overlap(pre, post, overlap_floor);
  const Complex delta3 = inner(post, omega) * inner(omega, pre) * inner(pre, post);
  const double p = std::norm(overlap);
  WeakValueResult r = polar(delta3 / p, p);
  r.argument = wrap_to_pi(std::arg(delta3));
  r.bargmann3 = delta3;
  return r;
}

double expectation_from_weak_values(const HermitianOperator& a, const Ket& pre, std::span<const Ket> basis,
                                    double overlap_floor) {
  const std::size_t d = a.dim();
  require_dims(d, pre, "pre-selected state");
  if (basis.size() != d) {
    throw ValidationError("basis is not complete: " + std::to_string(basis.size()) + " vectors in dimension " +
                          std::to_string(d));
  }
  for (std::size_t i = 0; i < d; ++i) {
    require_dims(d, basis[i], "basis vector");
    for (std::size_t j = i; j < d; ++j) {
      const Complex g = inner(basis[i], basis[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > 1e-10) {
        throw ValidationError("basis is not orthonormal at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  const std::vector<Complex> a_pre = apply(a.matrix(), pre);
  double total = 0.0;
  for (const auto& b : basis) {
    const Complex overlap = inner(b, pre);
    const double weight = std::norm(overlap);
    if (weight < overlap_floor) continue;
    const Complex wv = inner(b.amplitudes(), a_pre) / overlap;
    total += wv.real() * weight;
  }
  return total;
}

ActionDecomposition decompose_action(const HermitianOperator& a, const Ket& psi) {
  require_dims(a.dim(), psi, "state");
  ActionDecomposition out;
  std::vector<Complex> a_psi = apply(a.matrix(), psi);
  out.mean = expectation(a, psi);
  for (std::size_t i = 0; i < a_psi.size(); ++i) a_psi[i] -= out.mean * psi[i];
  out.spread = norm(a_psi);
  if (out.spread < kExactTol) {
    out.spread = 0.0;
    return out;
  }
  out.residual = Ket::normalize(a_psi);
  return out;
}

Complex decomposition_ratio(const HermitianOperator& a, const Ket& pre, const Ket& post, double overlap_floor) {
  require_dims(a.dim(), pre, "pre-selected state");
  const Complex overlap = selection_overlap(pre, post, overlap_floor);
  const ActionDecomposition dec = decompose_action(a, pre);
  if (!dec.residual) return 0.0;
  return inner(post, *dec.residual) / overlap;
}

Complex weak_value_via_decomposition(const HermitianOperator& a, const Ket& pre, const Ket& post,
                                     double overlap_floor) {
  require_dims(a.dim(), pre, "pre-selected state");
  const Complex overlap = selection_overlap(pre, post, overlap_floor);
  const ActionDecomposition dec = decompose_action(a, pre);
  if (!dec.residual) return dec.mean;
  return dec.mean + dec.spread * inner(post, *dec.residual) / overlap;
}

}  // namespace wvphase
