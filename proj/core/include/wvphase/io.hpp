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

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wvphase/geometric_phase.hpp"
#include "wvphase/linalg.hpp"
#include "wvphase/protocol.hpp"
#include "wvphase/sic.hpp"
#include "wvphase/weak_values.hpp"

namespace wvphase::io {

using Json = nlohmann::ordered_json;

// File formats. All parse errors raise ValidationError.
//
//   ket:       {"dim": d, "amplitudes": [[re, im], ...]}      (normalized on load)
//   operator:  {"dim": d, "entries": [[[re, im], ...], ...]}  (row-major, Hermitian)
//   protocol:  {"dim", "i", "j", "k", "g", "sigma", "shots_x", "shots_p", "seed",
//               "grid": {"x_min", "x_max", "n"}}              ("grid" optional)

Ket ket_from_json(const Json& j);
Json ket_to_json(const Ket& ket);

HermitianOperator operator_from_json(const Json& j);
Json operator_to_json(const HermitianOperator& op);

ProtocolConfig protocol_config_from_json(const Json& j);
Json protocol_config_to_json(const ProtocolConfig& config);

/// {"re", "im", "modulus", "argument", "postselect_prob", "bargmann3": [re, im] | null}
Json to_json(const WeakValueResult& r);
Json to_json(const ProtocolEstimate& e);
Json to_json(const BargmannInvariant& b);
Json to_json(const ExpansionCoefficients& c);
Json to_json(const CompositionReport& r);

/// Parses JSON text; ValidationError with the parser message on failure.
Json parse(std::string_view text);
Json read_json_file(const std::string& path);

/// Shortest round-trip decimal form; -0 prints as 0.
std::string format_double(double x);

/// i,j,k,re,im,modulus,arg_rad,arg_deg for every ordered triple of distinct
/// indices: the weak value of psi_j between psi_i and psi_k, with its
/// argument remapped to [0, 2pi).
std::string triple_table_csv(const SicSet& set);

/// theta_rad,cos_theta,multiplicity
std::string census_csv(const std::vector<CensusCluster>& clusters);

/// pool,index,accepted,value
std::string shots_csv(const std::vector<ShotRecord>& shots);

}  // namespace wvphase::io
