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
#include "wvphase/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <type_traits>

#include "wvphase/angles.hpp"
#include "wvphase/errors.hpp"

namespace wvphase::io {

namespace {

double clean(double x) { return x == 0.0 ? 0.0 : x; }

Json complex_to_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(std::string(what) + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if constexpr (std::is_integral_v<T>) {
    const bool ok = std::is_unsigned_v<T> ? v.is_number_unsigned() : v.is_number_integer();
    if (!ok) throw ValidationError(std::string("field \"") + key + "\" must be an integer" +
                                   (std::is_unsigned_v<T> ? " >= 0" : ""));
    if constexpr (std::is_signed_v<T>) {
      const auto wide = v.get<std::int64_t>();
      if (wide < std::numeric_limits<T>::min() || wide > std::numeric_limits<T>::max()) {
        throw ValidationError(std::string("field \"") + key + "\" is out of range");
      }
    }
  }
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

int required_dim(const Json& j) {
  const auto dim = required<std::int64_t>(j, "dim");
  if (dim < 1) throw ValidationError("\"dim\" must be >= 1");
  return static_cast<int>(dim);
}

}  // namespace

Ket ket_from_json(const Json& j) {
  const int dim = required_dim(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
    throw ValidationError("missing array field \"amplitudes\"");
  }
  const Json& amps = j["amplitudes"];
  if (amps.size() != static_cast<std::size_t>(dim)) {
    throw ValidationError("amplitudes length " + std::to_string(amps.size()) + " does not equal dim " +
                          std::to_string(dim));
  }
  std::vector<Complex> v;
  v.reserve(amps.size());
  for (const auto& a : amps) v.push_back(complex_from_json(a, "amplitude"));
  return Ket::normalize(v);
}

Json ket_to_json(const Ket& ket) {
  Json amps = Json::array();
  for (const auto& z : ket) amps.push_back(complex_to_json(z));
  return Json{{"dim", ket.dim()}, {"amplitudes", std::move(amps)}};
}

HermitianOperator operator_from_json(const Json& j) {
  const int dim = required_dim(j);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != static_cast<std::size_t>(dim)) {
    throw ValidationError("\"entries\" must be a dim x dim array");
  }
  std::vector<std::vector<Complex>> rows;
  for (const auto& row : j["entries"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw ValidationError("\"entries\" must be a dim x dim array");
    }
    std::vector<Complex> r;
    for (const auto& z : row) r.push_back(complex_from_json(z, "operator entry"));
    rows.push_back(std::move(r));
  }
  return HermitianOperator(Matrix::from_rows(rows), 1e-10);
}

Json operator_to_json(const HermitianOperator& op) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < op.dim(); ++c) row.push_back(complex_to_json(op.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", op.dim()}, {"entries", std::move(rows)}};
}

ProtocolConfig protocol_config_from_json(const Json& j) {
  static const char* const kKnown[] = {"dim", "i", "j", "k", "g", "sigma", "shots_x", "shots_p", "seed", "grid"};
  if (!j.is_object()) throw ValidationError("protocol config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ValidationError("unknown protocol config field \"" + key + "\"");
  }
  ProtocolConfig c;
  c.dim = required_dim(j);
  c.i = required<int>(j, "i");
  c.j = required<int>(j, "j");
  c.k = required<int>(j, "k");
  c.g = required<double>(j, "g");
  c.sigma = required<double>(j, "sigma");
  c.shots_x = required<std::int64_t>(j, "shots_x");
  c.shots_p = required<std::int64_t>(j, "shots_p");
  c.seed = required<std::uint64_t>(j, "seed");
  if (j.contains("grid") && !j["grid"].is_null()) {
    const Json& g = j["grid"];
    c.grid = Grid{required<double>(g, "x_min"), required<double>(g, "x_max"), required<int>(g, "n")};
    validate_grid(*c.grid);
  }
  return c;
}

Json protocol_config_to_json(const ProtocolConfig& c) {
  Json j{{"dim", c.dim}, {"i", c.i},           {"j", c.j},           {"k", c.k},      {"g", c.g},
         {"sigma", c.sigma}, {"shots_x", c.shots_x}, {"shots_p", c.shots_p}, {"seed", c.seed}};
  if (c.grid) j["grid"] = Json{{"x_min", c.grid->x_min}, {"x_max", c.grid->x_max}, {"n", c.grid->n}};
  return j;
}

Json to_json(const WeakValueResult& r) {
  Json j{{"re", clean(r.value.real())},
         {"im", clean(r.value.imag())},
         {"modulus", clean(r.modulus)},
         {"argument", clean(r.argument)},
         {"postselect_prob", clean(r.postselect_prob)}};
  j["bargmann3"] = r.bargmann3 ? complex_to_json(*r.bargmann3) : Json(nullptr);
  return j;
}

Json to_json(const ProtocolEstimate& e) {
  return Json{{"re_hat", clean(e.re_hat)},
              {"im_hat", clean(e.im_hat)},
              {"theta_hat", clean(e.theta_hat)},
              {"modulus_hat", clean(e.modulus_hat)},
              {"shots_position", e.shots_position},
              {"shots_momentum", e.shots_momentum},
              {"accepted_position", e.accepted_position},
              {"accepted_momentum", e.accepted_momentum},
              {"accepted_fraction", clean(e.accepted_fraction)},
              {"stderr_re", clean(e.stderr_re)},
              {"stderr_im", clean(e.stderr_im)}};
}

Json to_json(const BargmannInvariant& b) {
  return Json{{"order", b.order},
              {"re", clean(b.value.real())},
              {"im", clean(b.value.imag())},
              {"modulus", clean(std::abs(b.value))},
              {"argument", clean(b.argument)},
              {"degenerate", b.degenerate}};
}

Json to_json(const ExpansionCoefficients& c) {
  Json lambdas = Json::array();
  for (double x : c.lambdas) lambdas.push_back(clean(x));
  Json probs = Json::array();
  for (double p : c.probabilities) probs.push_back(clean(p));
  return Json{{"lambdas", std::move(lambdas)}, {"probabilities", std::move(probs)}};
}

Json to_json(const CompositionReport& r) {
  return Json{{"quadruples", r.quadruples},
              {"max_deviation", clean(r.max_deviation)},
              {"worst", Json::array({r.worst[0], r.worst[1], r.worst[2], r.worst[3]})}};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string format_double(double x) { return Json(clean(x)).dump(); }

std::string triple_table_csv(const SicSet& set) {
  std::ostringstream out;
  out << "i,j,k,re,im,modulus,arg_rad,arg_deg\n";
  const int n = static_cast<int>(set.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double theta = triple_phase(set, i, j, k);
        const WeakValueResult w = projector_weak_value(set[j], set[i], set[k]);
        out << i << ',' << j << ',' << k << ',' << format_double(w.value.real()) << ','
            << format_double(w.value.imag()) << ',' << format_double(w.modulus) << ',' << format_double(theta) << ','
            << format_double(to_degrees(theta)) << '\n';
      }
  return out.str();
}

std::string census_csv(const std::vector<CensusCluster>& clusters) {
  std::ostringstream out;
  out << "theta_rad,cos_theta,multiplicity\n";
  for (const auto& c : clusters) {
    out << format_double(c.theta) << ',' << format_double(c.cos_theta) << ',' << c.multiplicity << '\n';
  }
  return out.str();
}

std::string shots_csv(const std::vector<ShotRecord>& shots) {
  std::ostringstream out;
  out << "pool,index,accepted,value\n";
  for (const auto& s : shots) {
    out << (s.pool == ShotPool::position ? "x" : "p") << ',' << s.index << ',' << (s.accepted ? 1 : 0) << ','
        << format_double(s.value) << '\n';
  }
  return out.str();
}

}  // namespace wvphase::io
