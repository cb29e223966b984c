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

#include <array>
#include <cstdint>
#include <vector>

#include "wvphase/linalg.hpp"

namespace wvphase {

inline constexpr double kSicTol = 1e-10;
inline constexpr double kCensusTol = 1e-8;

enum class SicSource { builtin, user_fiducial };

/// d^2 equiangular kets: |<psi_i|psi_j>|^2 = 1/(d+1) for i != j, and
/// sum_i |psi_i><psi_i| = d * Identity. Both are checked at construction.
class SicSet {
 public:
  /// Throws DomainError("not a SIC fiducial ...") naming the worst pair when
  /// the states are not equiangular.
  SicSet(int dim, std::vector<Ket> states, SicSource source);

  int dim() const { return dim_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<Ket>& states() const { return states_; }
  const Ket& operator[](std::size_t i) const { return states_[i]; }
  SicSource source() const { return source_; }

 private:
  int dim_;
  std::vector<Ket> states_;
  SicSource source_;
};

/// Built-in SICs. d=2: the regular tetrahedron with Bloch vectors
/// (1,1,1)/sqrt3, (1,-1,-1)/sqrt3, (-1,1,-1)/sqrt3, (-1,-1,1)/sqrt3.
/// d=3: Weyl-Heisenberg orbit of (0, 1, -i)/sqrt2.
SicSet builtin_sic(int d);

/// States X^a Z^b |fiducial> at index a*d + b, with X the cyclic shift and Z
/// the clock diag(w^k), w = exp(2 pi i / d).
SicSet wh_orbit(const Ket& fiducial, SicSource source = SicSource::user_fiducial);

/// arg(<psi_k|psi_j><psi_j|psi_i><psi_i|psi_k>) in [0, 2pi): the argument of
/// the weak value of psi_j between pre-selection psi_i and post-selection
/// psi_k.
double triple_phase(const SicSet& set, int i, int j, int k);

/// theta_ijk for every ordered triple of distinct indices.
class TriplePhaseTable {
 public:
  explicit TriplePhaseTable(const SicSet& set);

  int dim() const { return dim_; }
  std::size_t size() const { return n_; }
  /// Throws ValidationError for repeated or out-of-range indices.
  double at(int i, int j, int k) const;

 private:
  int dim_;
  std::size_t n_;
  std::vector<double> theta_;  // n^3, unused on repeated indices
};

struct CensusCluster {
  double theta = 0.0;      ///< theta of the lexicographically first member, [0, 2pi)
  double cos_theta = 0.0;  ///< cluster mean of cos(theta)
  std::int64_t multiplicity = 0;
};

/// Groups all unordered triples by cos(theta) (adjacent values within
/// \p tol after sorting share a cluster). Sorted by cos_theta ascending;
/// multiplicities sum to C(d^2, 3).
std::vector<CensusCluster> triple_phase_census(const SicSet& set, double tol = kCensusTol);

struct ExpansionCoefficients {
  std::vector<double> lambdas;        ///< rho = sum_i lambda_i Pi_i
  std::vector<double> probabilities;  ///< outcome probabilities of the POVM {Pi_i / d}
};

/// p_i = |<psi_i|psi>|^2 / d, lambda_i = (d+1) p_i - 1/d.
ExpansionCoefficients expansion_coefficients(const Ket& psi, const SicSet& set);

/// Coefficients for an arbitrary (possibly mixed) state given its SIC
/// outcome probabilities.
ExpansionCoefficients expansion_from_probabilities(std::vector<double> probabilities, int d);

/// Tr(rho^3) - 1 written through the SIC structure constants:
///
///   sum_i l_i^3 + 3/(d+1) sum_{i!=k} l_i^2 l_k
///     + 6/(d+1)^{3/2} sum_{i<j<k} cos(theta_ijk) l_i l_j l_k - 1.
///
/// Vanishes for pure states; the maximally mixed state gives 1/d^2 - 1.
double purity_identity_residual(const ExpansionCoefficients& coeffs, const TriplePhaseTable& table);

/// Reduced form valid once sum l_i = sum l_i^2 = 1 has been imposed:
///   sum l_i^3 + 6/((d-2) sqrt(d+1)) sum_{i<j<k} cos(theta_ijk) l_i l_j l_k - 1.
/// Only defined for d >= 3 (the cubic term drops out at d = 2).
double reduced_purity_residual(const ExpansionCoefficients& coeffs, const TriplePhaseTable& table);

struct CompositionReport {
  std::int64_t quadruples = 0;
  double max_deviation = 0.0;
  std::array<int, 4> worst{0, 0, 0, 0};
};

/// Checks theta_ijk + theta_ikl - theta_ijl = theta_jkl (mod 2pi) for every
/// quadruple i<j<k<l and reports the largest circular deviation.
CompositionReport phase_composition_check(const SicSet& set);
CompositionReport phase_composition_check(const TriplePhaseTable& table);

}  // namespace wvphase
