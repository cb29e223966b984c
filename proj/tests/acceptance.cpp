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
// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion 4   run one

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wvphase/angles.hpp"
#include "wvphase/geometric_phase.hpp"
#include "wvphase/io.hpp"
#include "wvphase/pointer.hpp"
#include "wvphase/protocol.hpp"
#include "wvphase/sic.hpp"
#include "wvphase/weak_values.hpp"

using namespace wvphase;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string cplx(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g%+.3gi", z.real() == 0.0 ? 0.0 : z.real(), z.imag());
  return buf;
}

const double r2 = 1.0 / std::sqrt(2.0);
Ket zp() { return basis_ket(2, 0); }
Ket xp() { return Ket::normalize({r2, r2}); }
Ket yp() { return Ket::normalize({r2, Complex(0.0, r2)}); }
Ket ym() { return Ket::normalize({r2, Complex(0.0, -r2)}); }

Outcome spin_half_weak_values() {
  const Complex plus = weak_value(pauli_x(), zp(), yp()).value;
  const Complex minus = weak_value(pauli_x(), zp(), ym()).value;
  const double err = std::max(std::abs(plus - Complex(0.0, -1.0)), std::abs(minus - Complex(0.0, 1.0)));
  return {err <= 1e-12, "y+ -> " + cplx(plus) + ", y- -> " + cplx(minus) + ", max error " + sci(err) + " (tol 1e-12)"};
}

Outcome qubit_sic_triples() {
  const SicSet set = builtin_sic(2);
  double angle_err = 0.0, modulus_err = 0.0, real_err = 0.0, overlap_err = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i != j) overlap_err = std::max(overlap_err, std::abs(std::norm(inner(set[i], set[j])) - 1.0 / 3.0));
      for (int k = 0; k < 4; ++k) {
        if (i == j || j == k || i == k) continue;
        const WeakValueResult w = projector_weak_value(set[j], set[i], set[k]);
        modulus_err = std::max(modulus_err, std::abs(w.modulus - 1.0 / std::sqrt(3.0)));
        angle_err = std::max(angle_err, std::abs(std::abs(w.argument) - kPi / 2));
        real_err = std::max(real_err, std::abs(w.value.real()));
      }
    }
  const bool pass = overlap_err <= 1e-10 && modulus_err <= 1e-10 && angle_err <= 1e-10 && real_err <= 1e-10;
  return {pass, "overlap err " + sci(overlap_err) + ", modulus err " + sci(modulus_err) + ", |arg|-pi/2 err " +
                    sci(angle_err) + ", max |Re| " + sci(real_err) + " (tol 1e-10, 24 ordered triples)"};
}

Outcome qutrit_census() {
  const SicSet set = builtin_sic(3);
  const auto census = triple_phase_census(set, 1e-8);
  std::int64_t total = 0;
  std::ostringstream detail;
  detail << census.size() << " clusters {";
  for (std::size_t c = 0; c < census.size(); ++c) {
    total += census[c].multiplicity;
    detail << (c ? ", " : "") << "cos " << io::format_double(census[c].cos_theta) << " x" << census[c].multiplicity;
  }
  detail << "} over " << total << " triples (need 5 clusters, 84 triples)";
  return {census.size() == 5 && total == 84, detail.str()};
}

Outcome geodesic_bridge() {
  double worst = 0.0;
  int violations = 0, triples = 0;
  std::uint64_t seed = 0;
  for (int d : {2, 3, 5}) {
    for (int accepted = 0; accepted < 100; seed += 3) {
      const Ket a = haar_random_ket(d, seed), b = haar_random_ket(d, seed + 1), c = haar_random_ket(d, seed + 2);
      bool degenerate = false;
      for (const auto& [u, v] : {std::pair<const Ket&, const Ket&>{a, b}, {b, c}, {c, a}}) {
        const double p = std::norm(inner(u, v));
        degenerate = degenerate || p < 1e-6 || p > 1.0 - 1e-6;
      }
      if (degenerate) continue;
      ++accepted;
      ++triples;
      const double target = -bargmann(a, b, c).argument;
      double previous = kPi;
      for (int n = 1; n <= 4096; n *= 2) {
        const double err = circular_distance(geodesic_triangle_phase(a, b, c, n), target);
        if (err > previous + 1e-12) ++violations;
        previous = err;
      }
      worst = std::max(worst, previous);
    }
  }
  return {worst <= 1e-6 && violations == 0, std::to_string(triples) + " triples in d=2,3,5: max |phase(n=4096) + arg D3| " +
                                                sci(worst) + " (tol 1e-6), ladder monotonicity violations " +
                                                std::to_string(violations)};
}

Outcome octant() {
  const double arg = bargmann(zp(), xp(), yp()).argument;
  const double phase = geodesic_triangle_phase(zp(), xp(), yp(), 4096);
  const double err = std::max(std::abs(arg - kPi / 4), std::abs(phase + kPi / 4));
  return {err <= 1e-6, "arg D3 = " + io::format_double(arg) + ", geodesic phase = " + io::format_double(phase) +
                           ", error " + sci(err) + " (tol 1e-6)"};
}

Outcome expectation_reconstruction() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int d = 2 + static_cast<int>(s % 4);
    const HermitianOperator a = random_hermitian(d, 10000 + s);
    const Ket pre = haar_random_ket(d, 20000 + s);
    const auto basis = random_orthonormal_basis(d, 30000 + s);
    worst = std::max(worst, std::abs(expectation_from_weak_values(a, pre, basis) - expectation(a, pre)));
  }
  return {worst <= 1e-10, "100 instances in d=2..5: max error " + sci(worst) + " (tol 1e-10)"};
}

Outcome purity_identity() {
  double worst = 0.0;
  double mixed_min = 1.0;
  for (int d : {2, 3}) {
    const SicSet set = builtin_sic(d);
    const TriplePhaseTable table(set);
    for (std::uint64_t s = 0; s < 100; ++s) {
      worst = std::max(worst, std::abs(purity_identity_residual(expansion_coefficients(haar_random_ket(d, 40000 + s), set), table)));
    }
    const std::vector<double> p(static_cast<std::size_t>(d * d), 1.0 / (d * d));
    mixed_min = std::min(mixed_min, std::abs(purity_identity_residual(expansion_from_probabilities(p, d), table)));
  }
  return {worst <= 1e-9 && mixed_min > 1e-3, "200 pure states: max |residual| " + sci(worst) +
                                                 " (tol 1e-9); maximally mixed: min |residual| " + sci(mixed_min) +
                                                 " (must be nonzero)"};
}

Outcome phase_composition() {
  std::ostringstream detail;
  bool pass = true;
  for (int d : {2, 3}) {
    const CompositionReport r = phase_composition_check(builtin_sic(d));
    pass = pass && r.max_deviation <= 1e-9;
    detail << (d == 2 ? "" : "; ") << "d=" << d << ": " << r.quadruples << " quadruples, max deviation "
           << sci(r.max_deviation);
  }
  detail << " (tol 1e-9)";
  return {pass, detail.str()};
}

Outcome pointer_weak_limit() {
  const double sigma = 1.0;
  const std::vector<double> ladder{0.04, 0.02, 0.01, 0.005};
  double worst_rel = 0.0;
  std::vector<double> slopes;
  int instances = 0;
  for (std::uint64_t s = 50000; instances < 50; s += 3) {
    const Ket axis = haar_random_ket(2, s), pre = haar_random_ket(2, s + 1), post = haar_random_ket(2, s + 2);
    if (std::norm(inner(post, pre)) < 0.05) continue;
    ++instances;
    const Complex exact = projector_weak_value(axis, pre, post).value;
    std::vector<double> err_re, err_im;
    for (double g : ladder) {
      const WeakLimitEstimate e = weak_limit_estimate(axis, pre, post, sigma, g * sigma);
      err_re.push_back(std::abs(e.re - exact.real()));
      err_im.push_back(std::abs(e.im - exact.imag()));
    }
    for (const auto& [err, value] : {std::pair{&err_re, exact.real()}, {&err_im, exact.imag()}}) {
      if (std::abs(value) > 1e-9) worst_rel = std::max(worst_rel, err->back() / std::abs(value));
      // Least-squares slope of log(err) against log(g).
      if (*std::min_element(err->begin(), err->end()) < 1e-13) continue;
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < ladder.size(); ++i) {
        mx += std::log(ladder[i]);
        my += std::log((*err)[i]);
      }
      mx /= ladder.size();
      my /= ladder.size();
      double sxy = 0, sxx = 0;
      for (std::size_t i = 0; i < ladder.size(); ++i) {
        sxy += (std::log(ladder[i]) - mx) * (std::log((*err)[i]) - my);
        sxx += (std::log(ladder[i]) - mx) * (std::log(ladder[i]) - mx);
      }
      slopes.push_back(sxy / sxx);
    }
  }
  std::sort(slopes.begin(), slopes.end());
  const double median = slopes.empty() ? 0.0 : slopes[slopes.size() / 2];
  const bool accuracy = worst_rel <= 0.01;
  const bool slope_ok = !slopes.empty() && std::abs(median - 1.0) <= 0.25;
  return {accuracy && slope_ok,
          "50 instances: max relative error at g=0.005 sigma " + sci(worst_rel) + " (tol 1e-2) [" +
              (accuracy ? "ok" : "fails") + "]; median Richardson slope " + io::format_double(median) + " over " +
              std::to_string(slopes.size()) + " channels, range [" + io::format_double(slopes.front()) + ", " +
              io::format_double(slopes.back()) + "] (need |slope - 1| <= 0.25) [" + (slope_ok ? "ok" : "fails") + "]"};
}

ProtocolConfig end_to_end_config() {
  ProtocolConfig c;
  c.dim = 2;
  c.i = 0;
  c.j = 1;
  c.k = 2;
  c.g = 0.01;
  c.sigma = 1.0;
  c.shots_x = 1000000;
  c.shots_p = 1000000;
  c.seed = 7;
  return c;
}

Outcome protocol_end_to_end() {
  const SicSet set = builtin_sic(2);
  const ProtocolConfig c = end_to_end_config();
  const ProtocolEstimate e = protocol_run(set, c);
  const double theta = triple_phase(set, c.i, c.j, c.k);
  const Complex exact = projector_weak_value(set[c.j], set[c.i], set[c.k]).value;
  const double theta_err = circular_distance(e.theta_hat, theta);
  const double modulus_err = std::abs(e.modulus_hat - 1.0 / std::sqrt(3.0));
  const double fraction_err = std::abs(e.accepted_fraction - 1.0 / 3.0);
  const bool theta_ok = theta_err <= 0.05, modulus_ok = modulus_err <= 0.02, fraction_ok = fraction_err <= 0.01;
  std::ostringstream d;
  d << "theta_hat " << io::format_double(e.theta_hat) << " vs " << io::format_double(theta) << " (err "
    << sci(theta_err) << ", tol 0.05) [" << (theta_ok ? "ok" : "fails") << "]; modulus_hat "
    << io::format_double(e.modulus_hat) << " (err " << sci(modulus_err) << ", tol 0.02) ["
    << (modulus_ok ? "ok" : "fails") << "]; accepted_fraction " << io::format_double(e.accepted_fraction) << " (err "
    << sci(fraction_err) << ", tol 0.01) [" << (fraction_ok ? "ok" : "fails") << "]; z-scores re "
    << io::format_double((e.re_hat - exact.real()) / e.stderr_re) << ", im "
    << io::format_double((e.im_hat - exact.imag()) / e.stderr_im) << " (stderr re " << sci(e.stderr_re) << ", im "
    << sci(e.stderr_im) << ")";
  return {theta_ok && modulus_ok && fraction_ok, d.str()};
}

Outcome conjugation_symmetry() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int d = 2 + static_cast<int>(s % 4);
    const HermitianOperator a = random_hermitian(d, 60000 + s);
    const Ket pre = haar_random_ket(d, 70000 + 2 * s), post = haar_random_ket(d, 70001 + 2 * s);
    const Complex forward = weak_value(a, pre, post).value;
    const Complex backward = weak_value(a, post, pre).value;
    worst = std::max(worst, std::abs(forward - std::conj(backward)) / std::max(1.0, std::abs(forward)));
  }
  return {worst <= 1e-12, "100 instances: max |A_w(pre,post) - conj A_w(post,pre)| / max(1,|A_w|) " + sci(worst) +
                              " (tol 1e-12)"};
}

Outcome determinism() {
  const SicSet set = builtin_sic(2);
  ProtocolConfig c = end_to_end_config();
  std::vector<std::string> dumps;
  for (int threads : {1, 2, 4, 0}) {
    c.threads = threads;
    dumps.push_back(io::to_json(protocol_run(set, c)).dump());
  }
  c.threads = 1;
  dumps.push_back(io::to_json(protocol_run(set, c)).dump());
  const bool same = std::all_of(dumps.begin(), dumps.end(), [&](const std::string& s) { return s == dumps.front(); });
  return {same, "threads {1, 2, 4, auto, 1 again}: JSON " + std::string(same ? "byte-identical" : "differs")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "spin-1/2 weak values", spin_half_weak_values},
      {2, "qubit SIC triples", qubit_sic_triples},
      {3, "qutrit SIC census", qutrit_census},
      {4, "geodesic triangle vs Bargmann", geodesic_bridge},
      {5, "octant triangle", octant},
      {6, "expectation from weak values", expectation_reconstruction},
      {7, "cubic purity identity", purity_identity},
      {8, "triple-phase composition", phase_composition},
      {9, "pointer weak limit", pointer_weak_limit},
      {10, "protocol end-to-end", protocol_end_to_end},
      {11, "pre/post exchange conjugates", conjugation_symmetry},
      {12, "protocol determinism", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wvphase acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failures = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++ran;
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
  }
  if (ran > 1) std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
