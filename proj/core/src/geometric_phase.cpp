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
#include "wvphase/geometric_phase.hpp"

#include <cmath>
#include <string>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"

namespace wvphase {

namespace {

void require_pairwise_nonorthogonal(const Ket& a, const Ket& b, const Ket& c, double overlap_floor) {
  const Ket* states[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::norm(inner(*states[i], *states[j])) <= overlap_floor) {
        throw DomainError("orthogonal pair of states (" + std::to_string(i) + "," + std::to_string(j) +
                          "): phase undefined");
      }
    }
  }
}

}  // namespace

BargmannInvariant bargmann(std::span<const Ket> states, double overlap_floor) {
  if (states.size() < 3) {
    throw ValidationError("Bargmann invariant needs at least 3 states, got " + std::to_string(states.size()));
  }
  BargmannInvariant out;
  out.order = static_cast<int>(states.size());
  Complex product = 1.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Complex overlap = inner(states[k], states[(k + 1) % states.size()]);
    if (std::norm(overlap) <= overlap_floor) out.degenerate = true;
    product *= overlap;
  }
  out.value = product;
  out.argument = wrap_to_pi(std::arg(product));
  return out;
}

BargmannInvariant bargmann(const Ket& a, const Ket& b, const Ket& c, double overlap_floor) {
  const Ket states[3] = {a, b, c};
  return bargmann(states, overlap_floor);
}

GeodesicPath geodesic(const Ket& a, const Ket& b, int n, double overlap_floor) {
  if (n < 1) throw ValidationError("geodesic needs n >= 1 segments");
  const Complex overlap = inner(a, b);
  const double modulus = std::abs(overlap);
  if (modulus * modulus <= overlap_floor) throw DomainError("geodesic not unique: orthogonal endpoints");
  if (modulus >= 1.0 - kExactTol) throw DomainError("degenerate geodesic: endpoints are the same ray");

  const Ket aligned = b.with_phase(-std::arg(overlap));
  const double theta0 = std::acos(modulus);
  const double sin0 = std::sin(theta0);

  GeodesicPath path{{a, b}, {}};
  path.samples.reserve(static_cast<std::size_t>(n) + 1);
  path.samples.push_back(a);
  std::vector<Complex> v(a.dim());
  for (int s = 1; s < n; ++s) {
    const double t = static_cast<double>(s) / n;
    const double wa = std::sin((1.0 - t) * theta0) / sin0;
    const double wb = std::sin(t * theta0) / sin0;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = wa * a[i] + wb * aligned[i];
    path.samples.push_back(Ket::normalize(v));
  }
  path.samples.push_back(aligned);
  return path;
}

double polyline_phase(std::span<const Ket> closed_path, double overlap_floor) {
  if (closed_path.size() < 3) throw ValidationError("closed path needs at least 3 points");
  Complex product = 1.0;
  for (std::size_t k = 0; k < closed_path.size(); ++k) {
    const Complex overlap = inner(closed_path[k], closed_path[(k + 1) % closed_path.size()]);
    if (std::norm(overlap) <= overlap_floor) {
      throw DomainError("closed path has vanishing overlap between points " + std::to_string(k) + " and " +
                        std::to_string((k + 1) % closed_path.size()));
    }
    // Keep the running product at unit scale; only the phase matters.
    product *= overlap / std::abs(overlap);
  }
  return wrap_to_pi(-std::arg(product));
}

double geodesic_triangle_phase(const Ket& a, const Ket& b, const Ket& c, int n, double overlap_floor) {
  std::vector<Ket> loop;
  loop.reserve(3 * static_cast<std::size_t>(n));
  for (const auto& [from, to] : {std::pair<const Ket&, const Ket&>{a, b}, {b, c}, {c, a}}) {
    GeodesicPath side = geodesic(from, to, n, overlap_floor);
    // The end of each side is the start of the next one.
    for (int s = 0; s < n; ++s) loop.push_back(std::move(side.samples[static_cast<std::size_t>(s)]));
  }
  return polyline_phase(loop, overlap_floor);
}

bool is_null_phase(const Ket& a, const Ket& b, const Ket& c, double tol, double overlap_floor) {
  require_pairwise_nonorthogonal(a, b, c, overlap_floor);
  return std::abs(bargmann(a, b, c, overlap_floor).argument) <= tol;
}

bool constant_phase_membership(const Ket& pre, const Ket& post, const Ket& omega, double target, double tol,
                               double overlap_floor) {
  require_pairwise_nonorthogonal(pre, post, omega, overlap_floor);
  const double argument = bargmann(post, omega, pre, overlap_floor).argument;
  return circular_distance(argument, target) <= tol;
}

}  // namespace wvphase
