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
#include "wvphase/sic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"

namespace wvphase {

namespace {

void require_index(const SicSet& set, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= set.size()) {
    throw ValidationError("SIC index " + std::to_string(i) + " out of range [0, " + std::to_string(set.size()) + ")");
  }
}

void require_distinct(int i, int j, int k) {
  if (i == j || j == k || i == k) {
    throw ValidationError("triple indices must be distinct, got (" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ")");
  }
}

// Sum over unordered distinct triples of cos(theta_ijk) l_i l_j l_k.
double cubic_phase_sum(const std::vector<double>& l, const TriplePhaseTable& table) {
  const int n = static_cast<int>(table.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) s += std::cos(table.at(i, j, k)) * l[i] * l[j] * l[k];
  return s;
}

void require_consistent(const ExpansionCoefficients& coeffs, const TriplePhaseTable& table) {
  if (coeffs.lambdas.size() != table.size()) {
    throw ValidationError("expansion has " + std::to_string(coeffs.lambdas.size()) + " coefficients, table has " +
                          std::to_string(table.size()) + " states");
  }
}

}  // namespace

SicSet::SicSet(int dim, std::vector<Ket> states, SicSource source)
    : dim_(dim), states_(std::move(states)), source_(source) {
  if (dim_ < 2) throw ValidationError("SIC dimension must be >= 2");
  const std::size_t n = static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_);
  if (states_.size() != n) {
    throw ValidationError("SIC in d=" + std::to_string(dim_) + " needs " + std::to_string(n) + " states, got " +
                          std::to_string(states_.size()));
  }
  for (const auto& s : states_) {
    if (s.dim() != static_cast<std::size_t>(dim_)) throw ValidationError("SIC state has wrong dimension");
  }
  const double target = 1.0 / (dim_ + 1);
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  double worst_overlap = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double overlap = std::norm(inner(states_[i], states_[j]));
      if (std::abs(overlap - target) > worst) {
        worst = std::abs(overlap - target);
        wi = i;
        wj = j;
        worst_overlap = overlap;
      }
    }
  if (worst > kSicTol) {
    std::ostringstream msg;
    msg << "not a SIC fiducial: |<psi_" << wi << "|psi_" << wj << ">|^2 = " << worst_overlap << ", expected "
        << target;
    throw DomainError(msg.str());
  }
  Matrix frame(static_cast<std::size_t>(dim_));
  for (const auto& s : states_) frame = frame + outer(s, s);
  const double frame_error = frame.max_abs_diff(static_cast<double>(dim_) * Matrix::identity(frame.dim()));
  if (frame_error > kSicTol) {
    throw DomainError("not a SIC: sum of projectors deviates from d*Identity by " + std::to_string(frame_error));
  }
}

SicSet builtin_sic(int d) {
  if (d == 2) {
    const double c = 1.0 / std::sqrt(3.0);
    std::vector<Ket> states{ket_from_bloch(c, c, c), ket_from_bloch(c, -c, -c), ket_from_bloch(-c, c, -c),
                            ket_from_bloch(-c, -c, c)};
    return SicSet(2, std::move(states), SicSource::builtin);
  }
  if (d == 3) {
    const Ket fiducial = Ket::normalize({0.0, 1.0, Complex(0.0, -1.0)});
    return wh_orbit(fiducial, SicSource::builtin);
  }
  throw ValidationError("no built-in SIC for d=" + std::to_string(d) +
                        " (built-ins: 2, 3); supply a fiducial state file instead");
}

SicSet wh_orbit(const Ket& fiducial, SicSource source) {
  const std::size_t d = fiducial.dim();
  if (d < 2) throw ValidationError("fiducial dimension must be >= 2");
  std::vector<Ket> states;
  states.reserve(d * d);
  std::vector<Complex> v(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      // (X^a Z^b f)_m = w^{b (m-a)} f_{m-a}
      for (std::size_t m = 0; m < d; ++m) {
        const std::size_t src = (m + d - a) % d;
        const double angle = kTwoPi * static_cast<double>((b * src) % d) / static_cast<double>(d);
        v[m] = std::polar(1.0, angle) * fiducial[src];
      }
      states.push_back(Ket::normalize(v));
    }
  }
  return SicSet(static_cast<int>(d), std::move(states), source);
}

double triple_phase(const SicSet& set, int i, int j, int k) {
  require_index(set, i);
  require_index(set, j);
  require_index(set, k);
  require_distinct(i, j, k);
  const Complex product = inner(set[k], set[j]) * inner(set[j], set[i]) * inner(set[i], set[k]);
  return wrap_to_two_pi(std::arg(product));
}

TriplePhaseTable::TriplePhaseTable(const SicSet& set) : dim_(set.dim()), n_(set.size()), theta_(n_ * n_ * n_, 0.0) {
  const int n = static_cast<int>(n_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        theta_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k] = triple_phase(set, i, j, k);
      }
}

double TriplePhaseTable::at(int i, int j, int k) const {
  for (int idx : {i, j, k}) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= n_) {
      throw ValidationError("triple index " + std::to_string(idx) + " out of range");
    }
  }
  require_distinct(i, j, k);
  return theta_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
}

std::vector<CensusCluster> triple_phase_census(const SicSet& set, double tol) {
  struct Entry {
    double cos_theta;
    double theta;
    std::size_t ordinal;  // position in lexicographic triple order
  };
  const int n = static_cast<int>(set.size());
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double theta = triple_phase(set, i, j, k);
        entries.push_back({std::cos(theta), theta, entries.size()});
      }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.cos_theta < b.cos_theta; });

  std::vector<CensusCluster> clusters;
  double cos_sum = 0.0;
  std::size_t first = 0;
  auto close_cluster = [&] {
    if (clusters.empty()) return;
    clusters.back().cos_theta = cos_sum / static_cast<double>(clusters.back().multiplicity);
  };
  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (clusters.empty() || entries[e].cos_theta - entries[e - 1].cos_theta > tol) {
      close_cluster();
      clusters.push_back({entries[e].theta, 0.0, 0});
      cos_sum = 0.0;
      first = entries[e].ordinal;
    }
    ++clusters.back().multiplicity;
    cos_sum += entries[e].cos_theta;
    if (entries[e].ordinal < first) {
      first = entries[e].ordinal;
      clusters.back().theta = entries[e].theta;
    }
  }
  close_cluster();
  return clusters;
}

ExpansionCoefficients expansion_coefficients(const Ket& psi, const SicSet& set) {
  if (psi.dim() != static_cast<std::size_t>(set.dim())) {
    throw ValidationError("state dimension " + std::to_string(psi.dim()) + " does not match SIC dimension " +
                          std::to_string(set.dim()));
  }
  std::vector<double> p;
  p.reserve(set.size());
  for (const auto& s : set.states()) p.push_back(std::norm(inner(s, psi)) / set.dim());
  return expansion_from_probabilities(std::move(p), set.dim());
}

ExpansionCoefficients expansion_from_probabilities(std::vector<double> probabilities, int d) {
  if (probabilities.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
    throw ValidationError("expected d^2 = " + std::to_string(d * d) + " probabilities");
  }
  ExpansionCoefficients out;
  out.lambdas.reserve(probabilities.size());
  for (double p : probabilities) out.lambdas.push_back((d + 1) * p - 1.0 / d);
  out.probabilities = std::move(probabilities);
  return out;
}

double purity_identity_residual(const ExpansionCoefficients& coeffs, const TriplePhaseTable& table) {
  require_consistent(coeffs, table);
  const double d = table.dim();
  const auto& l = coeffs.lambdas;
  double cubes = 0.0;
  double sum = 0.0;
  double squares = 0.0;
  for (double x : l) {
    cubes += x * x * x;
    sum += x;
    squares += x * x;
  }
  // sum_{i != k} l_i^2 l_k = sum_i l_i^2 (sum - l_i)
  const double mixed = squares * sum - cubes;
  return cubes + 3.0 / (d + 1.0) * mixed + 6.0 / std::pow(d + 1.0, 1.5) * cubic_phase_sum(l, table) - 1.0;
}

double reduced_purity_residual(const ExpansionCoefficients& coeffs, const TriplePhaseTable& table) {
  require_consistent(coeffs, table);
  const double d = table.dim();
  if (table.dim() < 3) throw ValidationError("reduced purity form needs d >= 3");
  double cubes = 0.0;
  for (double x : coeffs.lambdas) cubes += x * x * x;
  return cubes + 6.0 / ((d - 2.0) * std::sqrt(d + 1.0)) * cubic_phase_sum(coeffs.lambdas, table) - 1.0;
}

CompositionReport phase_composition_check(const TriplePhaseTable& table) {
  CompositionReport report;
  const int n = static_cast<int>(table.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const double lhs = table.at(i, j, k) + table.at(i, k, l) - table.at(i, j, l);
          const double deviation = circular_distance(lhs, table.at(j, k, l));
          ++report.quadruples;
          if (report.quadruples == 1 || deviation > report.max_deviation) {
            report.max_deviation = deviation;
            report.worst = {i, j, k, l};
          }
        }
  return report;
}

CompositionReport phase_composition_check(const SicSet& set) {
  if (set.size() < 4) throw ValidationError("phase composition needs at least 4 states");
  return phase_composition_check(TriplePhaseTable(set));
}

}  // namespace wvphase
