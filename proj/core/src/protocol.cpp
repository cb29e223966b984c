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
#include "wvphase/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"
#include "wvphase/rng.hpp"

namespace wvphase {

namespace {

constexpr std::int64_t kChunkShots = 1 << 15;

// Inverse CDF of a density sampled on a uniform grid: trapezoid masses per
// cell, uniform within each cell.
class GridSampler {
 public:
  GridSampler(const Grid& grid, const std::vector<double>& density) : grid_(grid), cdf_(density.size(), 0.0) {
    const double dx = grid.spacing();
    for (std::size_t c = 1; c < density.size(); ++c) cdf_[c] = cdf_[c - 1] + 0.5 * dx * (density[c - 1] + density[c]);
    if (!(cdf_.back() > 0.0)) throw DomainError("sampling density vanishes on the grid");
  }

  double sample(double u) const {
    const double target = u * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    std::size_t cell = it == cdf_.begin() ? 0 : static_cast<std::size_t>(it - cdf_.begin()) - 1;
    cell = std::min(cell, cdf_.size() - 2);
    const double mass = cdf_[cell + 1] - cdf_[cell];
    const double frac = mass > 0.0 ? (target - cdf_[cell]) / mass : 0.5;
    return grid_.x(static_cast<int>(cell)) + std::clamp(frac, 0.0, 1.0) * grid_.spacing();
  }

 private:
  Grid grid_;
  std::vector<double> cdf_;
};

struct PoolSums {
  std::int64_t accepted = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
};

PoolSums run_pool(ShotPool pool, std::int64_t shots, double accept_prob, const GridSampler& sampler,
                  std::uint64_t seed, int threads, std::vector<ShotRecord>* records) {
  const std::uint64_t stream = pool == ShotPool::position ? 1 : 2;
  const std::int64_t chunks = (shots + kChunkShots - 1) / kChunkShots;
  std::vector<PoolSums> partial(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> next{0};

  auto worker = [&] {
    for (std::int64_t c = next++; c < chunks; c = next++) {
      PoolSums local;
      const std::int64_t end = std::min(shots, (c + 1) * kChunkShots);
      for (std::int64_t s = c * kChunkShots; s < end; ++s) {
        const auto index = static_cast<std::uint64_t>(s);
        const bool accepted = counter_uniform(seed, stream, index, 0) < accept_prob;
        double value = 0.0;
        if (accepted) {
          value = sampler.sample(counter_uniform(seed, stream, index, 1));
          ++local.accepted;
          local.sum += value;
          local.sum_sq += value * value;
        }
        if (records) (*records)[static_cast<std::size_t>(s)] = {pool, s, accepted, value};
      }
      partial[static_cast<std::size_t>(c)] = local;
    }
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool_threads;
    pool_threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool_threads.emplace_back(worker);
  }

  PoolSums total;
  for (const auto& p : partial) {
    total.accepted += p.accepted;
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  return total;
}

double sample_stddev(const PoolSums& s) {
  if (s.accepted < 2) return 0.0;
  const double n = static_cast<double>(s.accepted);
  const double mean = s.sum / n;
  return std::sqrt(std::max(0.0, (s.sum_sq - n * mean * mean) / (n - 1.0)));
}

}  // namespace

Grid momentum_grid(const Grid& position_grid) {
  validate_grid(position_grid);
  const double dp = kTwoPi / (position_grid.n * position_grid.spacing());
  const double p_min = -static_cast<double>(position_grid.n / 2) * dp;
  return Grid{p_min, p_min + (position_grid.n - 1) * dp, position_grid.n};
}

ProtocolEstimate protocol_run(const SicSet& set, const ProtocolConfig& config, std::vector<ShotRecord>* shots) {
  if (config.dim != set.dim()) {
    throw ValidationError("protocol dim " + std::to_string(config.dim) + " does not match SIC dimension " +
                          std::to_string(set.dim()));
  }
  const int n = static_cast<int>(set.size());
  for (int idx : {config.i, config.j, config.k}) {
    if (idx < 0 || idx >= n) throw ValidationError("SIC index " + std::to_string(idx) + " out of range");
  }
  if (config.i == config.j || config.j == config.k || config.i == config.k) {
    throw ValidationError("protocol indices i, j, k must be distinct");
  }
  if (!(config.sigma > 0.0)) throw ValidationError("pointer spread sigma must be > 0");
  if (!(config.g > 0.0) || config.g > kMaxWeakCoupling * config.sigma * (1.0 + 1e-12)) {
    throw ValidationError("weak coupling requires 0 < g <= 0.05 sigma");
  }
  if (config.shots_x < 1 || config.shots_p < 1) throw ValidationError("shot counts must be >= 1");

  const Ket& pre = set[static_cast<std::size_t>(config.i)];
  const Ket& axis = set[static_cast<std::size_t>(config.j)];
  const Ket& post = set[static_cast<std::size_t>(config.k)];
  const Grid grid = config.grid.value_or(default_grid(config.sigma, config.g));

  const PointerState pointer = couple_and_postselect(axis, pre, post, config.g, config.sigma, grid);
  const double accept_prob = pointer.norm_sq;

  std::vector<double> x_density(pointer.amplitudes.size());
  for (std::size_t m = 0; m < x_density.size(); ++m) x_density[m] = std::norm(pointer.amplitudes[m]);
  const GridSampler x_sampler(grid, x_density);

  const auto [c0, c1] = coupling_amplitudes(axis, pre, post);
  const Grid p_grid = momentum_grid(grid);
  std::vector<double> p_density(static_cast<std::size_t>(p_grid.n));
  const double s2 = config.sigma * config.sigma;
  for (int m = 0; m < p_grid.n; ++m) {
    const double p = p_grid.x(m);
    p_density[static_cast<std::size_t>(m)] =
        std::norm(c0 + c1 * std::polar(1.0, -config.g * p)) * std::exp(-2.0 * s2 * p * p);
  }
  const GridSampler p_sampler(p_grid, p_density);

  int threads = config.threads;
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<ShotRecord> x_records, p_records;
  if (shots) {
    x_records.resize(static_cast<std::size_t>(config.shots_x));
    p_records.resize(static_cast<std::size_t>(config.shots_p));
  }
  const PoolSums xs = run_pool(ShotPool::position, config.shots_x, accept_prob, x_sampler, config.seed, threads,
                               shots ? &x_records : nullptr);
  const PoolSums ps = run_pool(ShotPool::momentum, config.shots_p, accept_prob, p_sampler, config.seed, threads,
                               shots ? &p_records : nullptr);
  if (shots) {
    shots->clear();
    shots->reserve(x_records.size() + p_records.size());
    shots->insert(shots->end(), x_records.begin(), x_records.end());
    shots->insert(shots->end(), p_records.begin(), p_records.end());
  }
  if (xs.accepted == 0 || ps.accepted == 0) {
    throw DomainError("post-selection starved: no accepted shots in the " +
                      std::string(xs.accepted == 0 ? "position" : "momentum") + " pool");
  }

  ProtocolEstimate est;
  est.shots_position = config.shots_x;
  est.shots_momentum = config.shots_p;
  est.accepted_position = xs.accepted;
  est.accepted_momentum = ps.accepted;
  est.accepted_fraction =
      static_cast<double>(xs.accepted + ps.accepted) / static_cast<double>(config.shots_x + config.shots_p);
  const double mean_x = xs.sum / static_cast<double>(xs.accepted);
  const double mean_p = ps.sum / static_cast<double>(ps.accepted);
  est.re_hat = mean_x / config.g;
  est.im_hat = 2.0 * s2 * mean_p / config.g;
  est.theta_hat = wrap_to_two_pi(std::atan2(est.im_hat, est.re_hat));
  est.modulus_hat = std::hypot(est.re_hat, est.im_hat);
  est.stderr_re = sample_stddev(xs) / (config.g * std::sqrt(static_cast<double>(xs.accepted)));
  est.stderr_im = 2.0 * s2 * sample_stddev(ps) / (config.g * std::sqrt(static_cast<double>(ps.accepted)));
  return est;
}

}  // namespace wvphase
