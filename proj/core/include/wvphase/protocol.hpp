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

#include <cstdint>
#include <optional>
#include <vector>

#include "wvphase/pointer.hpp"
#include "wvphase/sic.hpp"

namespace wvphase {

/// Strong-weak-strong run: prepare psi_i, couple |psi_j><psi_j| to the
/// pointer with strength g, post-select psi_k.
struct ProtocolConfig {
  int dim = 2;
  int i = 0, j = 1, k = 2;
  double g = 0.01;
  double sigma = 1.0;
  std::int64_t shots_x = 0;
  std::int64_t shots_p = 0;
  std::uint64_t seed = 0;
  std::optional<Grid> grid;  ///< defaults to default_grid(sigma, g)
  int threads = 1;           ///< 0 = hardware concurrency; never changes results
};

struct ProtocolEstimate {
  double re_hat = 0.0;
  double im_hat = 0.0;
  double theta_hat = 0.0;  ///< [0, 2pi)
  double modulus_hat = 0.0;
  std::int64_t shots_position = 0;
  std::int64_t shots_momentum = 0;
  std::int64_t accepted_position = 0;
  std::int64_t accepted_momentum = 0;
  double accepted_fraction = 0.0;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
};

enum class ShotPool { position, momentum };

struct ShotRecord {
  ShotPool pool;
  std::int64_t index;
  bool accepted;
  double value;  ///< sampled x or p; 0 when rejected
};

/// Monte Carlo estimate of the weak value of psi_j between psi_i and psi_k.
///
/// Each shot is accepted with the exact joint post-selection probability;
/// accepted position shots draw x from |phi_f(x)|^2 and momentum shots draw p
/// from |c0 + c1 exp(-i g p)|^2 |phi0~(p)|^2, both by inverse CDF on a grid.
/// Rejected shots are discarded. Shot s of a pool uses the counter-based
/// substream (seed, pool, s), and partial sums are reduced in fixed chunk
/// order, so results are bitwise identical for any thread count.
///
/// Throws ValidationError on bad indices or parameters (g must satisfy
/// 0 < g <= 0.05 sigma) and DomainError("post-selection starved") if a pool
/// accepts no shots.
ProtocolEstimate protocol_run(const SicSet& set, const ProtocolConfig& config,
                              std::vector<ShotRecord>* shots = nullptr);

/// The conjugate momentum grid used for momentum sampling: n points,
/// spacing 2 pi / (n dx), centred on 0.
Grid momentum_grid(const Grid& position_grid);

}  // namespace wvphase
