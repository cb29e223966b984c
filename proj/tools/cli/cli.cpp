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
#include "cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/names.hpp"
#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"
#include "wvphase/geometric_phase.hpp"
#include "wvphase/io.hpp"
#include "wvphase/pointer.hpp"
#include "wvphase/protocol.hpp"
#include "wvphase/sic.hpp"
#include "wvphase/weak_values.hpp"

#ifndef WVPHASE_VERSION
#define WVPHASE_VERSION "0.0.0"
#endif

namespace wvphase::cli {

namespace {

using io::Json;
using io::format_double;

Json complex_json(Complex z) { return Json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}); }

void emit(const Json& j, std::ostream& out) { out << j.dump() << '\n'; }

SicSet resolve_sic(const RunConfig& c) {
  if (!c.fiducial.empty()) return wh_orbit(io::ket_from_json(io::read_json_file(c.fiducial)));
  if (c.dim == 0) throw ValidationError("need --dim or --fiducial");
  return builtin_sic(c.dim);
}

void run_weak_value(const RunConfig& c, std::ostream& out) {
  const Ket pre = resolve_state(c.pre);
  const Ket post = resolve_state(c.post);
  std::optional<Ket> axis;
  if (!c.projector.empty()) axis = resolve_state(c.projector);
  const HermitianOperator a = axis ? Projector{*axis}.as_operator() : resolve_operator(c.observable);
  Json j = io::to_json(axis ? projector_weak_value(*axis, pre, post, c.overlap_floor)
                            : weak_value(a, pre, post, c.overlap_floor));
  if (c.decompose) {
    const ActionDecomposition dec = decompose_action(a, pre);
    const Complex ratio = decomposition_ratio(a, pre, post, c.overlap_floor);
    const double p = j["postselect_prob"].get<double>();
    j["decomposition"] = Json{
        {"mean", dec.mean},
        {"spread", dec.spread},
        {"residual", dec.residual ? io::ket_to_json(*dec.residual) : Json(nullptr)},
        {"ratio", complex_json(ratio)},
        {"ratio_modulus", std::abs(ratio)},
        {"sqrt_one_minus_p_over_p", std::sqrt((1.0 - p) / p)},
        {"one_minus_p_over_p", (1.0 - p) / p},
        {"weak_value", complex_json(weak_value_via_decomposition(a, pre, post, c.overlap_floor))},
    };
  }
  if (!c.basis.empty()) {
    std::vector<Ket> basis;
    for (const auto& s : c.basis) basis.push_back(resolve_state(s));
    j["expectation"] = expectation(a, pre);
    j["expectation_from_weak_values"] = expectation_from_weak_values(a, pre, basis, c.overlap_floor);
  }
  emit(j, out);
}

void run_bargmann(const RunConfig& c, std::ostream& out) {
  std::vector<Ket> states;
  for (const auto& s : c.states) states.push_back(resolve_state(s));
  const BargmannInvariant inv = bargmann(states, c.overlap_floor);
  if (c.format == OutputFormat::csv) {
    out << "order,re,im,modulus,arg_rad,arg_deg\n"
        << inv.order << ',' << format_double(inv.value.real()) << ',' << format_double(inv.value.imag()) << ','
        << format_double(std::abs(inv.value)) << ',' << format_double(inv.argument) << ','
        << format_double(to_degrees(inv.argument)) << '\n';
    return;
  }
  Json j = io::to_json(inv);
  if (c.null_tol || c.target) {
    if (states.size() != 3) throw ValidationError("--null-tol and --target need exactly 3 states");
    if (c.null_tol) j["null_phase"] = is_null_phase(states[0], states[1], states[2], *c.null_tol, c.overlap_floor);
    if (c.target) {
      // Delta3(a, b, c) = Delta3(post, omega, pre) with post=a, omega=b, pre=c.
      j["on_constant_phase_curve"] =
          constant_phase_membership(states[2], states[0], states[1], *c.target, c.tol, c.overlap_floor);
    }
  }
  emit(j, out);
}

void run_triangle_phase(const RunConfig& c, std::ostream& out) {
  const Ket a = resolve_state(c.a);
  const Ket b = resolve_state(c.b);
  const Ket cc = resolve_state(c.c);
  if (c.n < 1) throw ValidationError("--n must be >= 1");
  const double arg_delta = bargmann(a, b, cc, c.overlap_floor).argument;
  std::vector<int> ns;
  if (c.ladder) {
    for (int n = 8; n < c.n; n *= 2) ns.push_back(n);
  }
  ns.push_back(c.n);

  Json rows = Json::array();
  for (int n : ns) {
    const double phase = geodesic_triangle_phase(a, b, cc, n, c.overlap_floor);
    rows.push_back(Json{{"n", n},
                        {"geometric_phase", phase},
                        {"bargmann_argument", arg_delta},
                        {"error", circular_distance(phase, -arg_delta)}});
  }
  if (c.format == OutputFormat::csv) {
    out << "n,geometric_phase_rad,geometric_phase_deg,bargmann_arg_rad,error\n";
    for (const auto& r : rows) {
      const double phase = r["geometric_phase"].get<double>();
      out << r["n"].get<int>() << ',' << format_double(phase) << ',' << format_double(to_degrees(phase)) << ','
          << format_double(arg_delta) << ',' << format_double(r["error"].get<double>()) << '\n';
    }
    return;
  }
  emit(c.ladder ? Json{{"ladder", rows}} : rows.back(), out);
}

void run_sic_generate(const RunConfig& c, std::ostream& out) {
  const SicSet set = resolve_sic(c);
  if (c.format == OutputFormat::csv) {
    out << io::triple_table_csv(set);
    return;
  }
  Json states = Json::array();
  for (const auto& s : set.states()) states.push_back(io::ket_to_json(s));
  Json j{{"dim", set.dim()},
         {"source", set.source() == SicSource::builtin ? "builtin" : "user_fiducial"},
         {"states", std::move(states)}};
  if (set.size() >= 4) j["composition"] = io::to_json(phase_composition_check(set));
  emit(j, out);
}

void run_sic_census(const RunConfig& c, std::ostream& out) {
  const SicSet set = resolve_sic(c);
  const auto clusters = triple_phase_census(set, c.census_tol);
  if (c.format == OutputFormat::csv) {
    out << io::census_csv(clusters);
    return;
  }
  Json rows = Json::array();
  std::int64_t total = 0;
  for (const auto& cl : clusters) {
    rows.push_back(Json{{"theta_rad", cl.theta}, {"cos_theta", cl.cos_theta}, {"multiplicity", cl.multiplicity}});
    total += cl.multiplicity;
  }
  emit(Json{{"dim", set.dim()}, {"triples", total}, {"clusters", std::move(rows)}}, out);
}

void run_sic_purity(const RunConfig& c, std::ostream& out) {
  const SicSet set = resolve_sic(c);
  ExpansionCoefficients coeffs;
  if (c.maximally_mixed) {
    const double d = set.dim();
    coeffs = expansion_from_probabilities(std::vector<double>(set.size(), 1.0 / (d * d)), set.dim());
  } else {
    if (c.state.empty()) throw ValidationError("need --state or --maximally-mixed");
    coeffs = expansion_coefficients(resolve_state(c.state), set);
  }
  const TriplePhaseTable table(set);
  double sum = 0.0, sum_sq = 0.0;
  for (double l : coeffs.lambdas) {
    sum += l;
    sum_sq += l * l;
  }
  Json j = io::to_json(coeffs);
  j["sum_lambda"] = sum;
  j["sum_lambda_sq"] = sum_sq;
  j["residual"] = purity_identity_residual(coeffs, table);
  j["reduced_residual"] = set.dim() >= 3 ? Json(reduced_purity_residual(coeffs, table)) : Json(nullptr);
  emit(j, out);
}

Grid grid_from(const RunConfig& c) {
  const Grid def = default_grid(c.sigma, c.g);
  return Grid{c.x_min.value_or(def.x_min), c.x_max.value_or(def.x_max), c.grid_n.value_or(def.n)};
}

void run_pointer(const RunConfig& c, std::ostream& out) {
  const Ket axis = resolve_state(c.projector);
  const Ket pre = resolve_state(c.pre);
  const Ket post = resolve_state(c.post);
  const Grid grid = grid_from(c);
  const PointerState state = couple_and_postselect(axis, pre, post, c.g, c.sigma, grid, c.overlap_floor);
  const PointerMeans means = pointer_means(state);
  const WeakValueResult exact = projector_weak_value(axis, pre, post, c.overlap_floor);
  Json j{{"g", c.g},         {"sigma", c.sigma},           {"norm_sq", state.norm_sq},
         {"mean_x", means.mean_x}, {"mean_p", means.mean_p}};
  if (c.g > 0.0 && c.g <= kMaxWeakCoupling * c.sigma) {
    const WeakLimitEstimate est = weak_limit_estimate(axis, pre, post, c.sigma, c.g, grid);
    j["re_est"] = est.re;
    j["im_est"] = est.im;
  } else {
    j["re_est"] = nullptr;
    j["im_est"] = nullptr;
  }
  j["weak_value"] = io::to_json(exact);
  emit(j, out);
}

void run_protocol(const RunConfig& c, std::ostream& out) {
  ProtocolConfig pc;
  if (!c.config_path.empty()) {
    pc = io::protocol_config_from_json(io::read_json_file(c.config_path));
  } else {
    pc.dim = c.dim == 0 ? 2 : c.dim;
    pc.i = c.i;
    pc.j = c.j;
    pc.k = c.k;
    pc.g = c.g;
    pc.sigma = c.sigma;
    pc.shots_x = c.shots_x;
    pc.shots_p = c.shots_p;
    pc.seed = c.seed;
    if (c.x_min || c.x_max || c.grid_n) pc.grid = grid_from(c);
  }
  pc.threads = c.threads;
  const SicSet set = !c.fiducial.empty() ? wh_orbit(io::ket_from_json(io::read_json_file(c.fiducial)))
                                         : builtin_sic(pc.dim);
  std::vector<ShotRecord> shots;
  const ProtocolEstimate est = protocol_run(set, pc, c.dump_shots.empty() ? nullptr : &shots);
  if (!c.dump_shots.empty()) {
    std::ofstream dump(c.dump_shots);
    if (!dump) throw ValidationError("cannot write shot dump: " + c.dump_shots);
    dump << io::shots_csv(shots);
  }
  emit(io::to_json(est), out);
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_sic_source(CLI::App* sub, RunConfig& c) {
  auto* dim = sub->add_option("--dim", c.dim, "Dimension of the built-in SIC (2 or 3)");
  auto* fid = sub->add_option("--fiducial", c.fiducial, "JSON ket file; its Weyl-Heisenberg orbit is used");
  dim->excludes(fid);
}

void add_grid(CLI::App* sub, RunConfig& c) {
  sub->add_option("--x-min", c.x_min, "Pointer grid lower bound (default -8 sigma)");
  sub->add_option("--x-max", c.x_max, "Pointer grid upper bound (default 8 sigma + g)");
  sub->add_option("--n-grid", c.grid_n, "Pointer grid points (default 4096)")->check(CLI::PositiveNumber);
}

}  // namespace

std::string version_string() {
  std::ostringstream s;
  s << "wvphase " << WVPHASE_VERSION << " (census_tol=" << kCensusTol << ", grid=[-" << kGridTailSigmas
    << " sigma, " << kGridTailSigmas << " sigma + g] x " << kDefaultGridPoints
    << " points, overlap_floor=" << kDefaultOverlapFloor << ")";
  return s.str();
}

void execute(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::weak_value: return run_weak_value(config, out);
    case Command::bargmann: return run_bargmann(config, out);
    case Command::triangle_phase: return run_triangle_phase(config, out);
    case Command::sic_generate: return run_sic_generate(config, out);
    case Command::sic_census: return run_sic_census(config, out);
    case Command::sic_purity: return run_sic_purity(config, out);
    case Command::pointer: return run_pointer(config, out);
    case Command::protocol: return run_protocol(config, out);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string format_text;
  CLI::App app{"Weak values, Bargmann invariants, geometric phases and SIC-POVM triple phases", "wvphase"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  app.add_option("--overlap-floor", c.overlap_floor, "Smallest accepted |<post|pre>|^2")
      ->check(CLI::PositiveNumber);

  auto* wv = app.add_subcommand("weak-value", "Weak value of an observable or projector");
  wv->add_option("--pre", c.pre, "Pre-selected state")->required();
  wv->add_option("--post", c.post, "Post-selected state")->required();
  auto* obs = wv->add_option("--observable", c.observable, "Observable: sigmax|sigmay|sigmaz|proj:<state>|file");
  auto* proj = wv->add_option("--projector", c.projector, "Projector axis state (reports the Bargmann numerator)");
  obs->excludes(proj);
  wv->add_flag("--decompose", c.decompose, "Add the mean/spread decomposition of A|pre>");
  wv->add_option("--basis", c.basis, "Orthonormal basis for the expectation reconstruction")->expected(1, -1);

  auto* bg = app.add_subcommand("bargmann", "Bargmann invariant of 3 or more states");
  bg->add_option("--state", c.states, "State (repeat, at least 3)")->required()->expected(1, -1);
  bg->add_option("--null-tol", c.null_tol, "Report whether the 3 states have null phase at this tolerance");
  bg->add_option("--target", c.target, "Report whether arg Delta3 is within --tol of this angle (radians)");
  bg->add_option("--tol", c.tol, "Tolerance for --target (radians)");
  add_format(bg, format_text);

  auto* tp = app.add_subcommand("triangle-phase", "Geometric phase of a geodesic triangle");
  tp->add_option("--a", c.a, "First vertex")->required();
  tp->add_option("--b", c.b, "Second vertex")->required();
  tp->add_option("--c", c.c, "Third vertex")->required();
  tp->add_option("--n", c.n, "Segments per side (default 1024)");
  tp->add_flag("--ladder", c.ladder, "Report every n = 8, 16, ... up to --n");
  add_format(tp, format_text);

  auto* sg = app.add_subcommand("sic-generate", "SIC states (json) or the triple-phase table (csv)");
  add_sic_source(sg, c);
  add_format(sg, format_text);

  auto* sc = app.add_subcommand("sic-census", "Cluster the triple phases of all unordered triples by cos(theta)");
  add_sic_source(sc, c);
  sc->add_option("--tol", c.census_tol, "Clustering tolerance on cos(theta) (default 1e-8)");
  add_format(sc, format_text);

  auto* sp = app.add_subcommand("sic-purity", "SIC expansion coefficients and the cubic purity residual");
  add_sic_source(sp, c);
  auto* st = sp->add_option("--state", c.state, "State to expand");
  auto* mm = sp->add_flag("--maximally-mixed", c.maximally_mixed, "Expand the maximally mixed state instead");
  st->excludes(mm);

  auto* pt = app.add_subcommand("pointer", "Exact von Neumann pointer after coupling and post-selection");
  pt->add_option("--projector", c.projector, "Projector axis state")->required();
  pt->add_option("--pre", c.pre, "Pre-selected state")->required();
  pt->add_option("--post", c.post, "Post-selected state")->required();
  pt->add_option("--g", c.g, "Coupling strength (default 0.01)");
  pt->add_option("--sigma", c.sigma, "Pointer spread (default 1)");
  add_grid(pt, c);

  auto* pr = app.add_subcommand("protocol", "Shot-based strong-weak-strong estimate of a SIC triple phase");
  pr->add_option("--config", c.config_path, "Protocol JSON config (overrides the numeric flags)");
  add_sic_source(pr, c);
  pr->add_option("--i", c.i, "Pre-selected SIC index");
  pr->add_option("--j", c.j, "Weakly measured SIC index");
  pr->add_option("--k", c.k, "Post-selected SIC index");
  pr->add_option("--g", c.g, "Coupling strength, <= 0.05 sigma (default 0.01)");
  pr->add_option("--sigma", c.sigma, "Pointer spread (default 1)");
  pr->add_option("--shots-x", c.shots_x, "Position-readout shots (default 100000)");
  pr->add_option("--shots-p", c.shots_p, "Momentum-readout shots (default 100000)");
  pr->add_option("--seed", c.seed, "Random seed (default 0)");
  pr->add_option("--threads", c.threads, "Worker threads, 0 = all cores; output does not depend on it");
  pr->add_option("--dump-shots", c.dump_shots, "Write per-shot CSV to this file");
  add_grid(pr, c);

  const std::vector<std::pair<CLI::App*, Command>> commands{
      {wv, Command::weak_value},     {bg, Command::bargmann},     {tp, Command::triangle_phase},
      {sg, Command::sic_generate},   {sc, Command::sic_census},   {sp, Command::sic_purity},
      {pt, Command::pointer},        {pr, Command::protocol}};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) c.command = command;
  }
  if (format_text.empty()) {
    c.format = c.command == Command::sic_census ? OutputFormat::csv : OutputFormat::json;
  } else {
    c.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;
  }
  if (c.command == Command::weak_value && c.observable.empty() && c.projector.empty()) {
    err << "error: weak-value needs --observable or --projector\n";
    return kExitValidation;
  }

  try {
    std::ostringstream buffer;
    execute(c, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wvphase::cli
