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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wvphase::cli {

enum class Command {
  weak_value,
  bargmann,
  triangle_phase,
  sic_generate,
  sic_census,
  sic_purity,
  pointer,
  protocol,
};

enum class OutputFormat { json, csv };

/// Everything a run depends on. Two runs with equal RunConfig print the same
/// bytes.
struct RunConfig {
  Command command = Command::weak_value;
  OutputFormat format = OutputFormat::json;

  // States and operators: a file path or a built-in name (see names.hpp).
  std::string pre, post, observable, projector;
  std::vector<std::string> states;
  std::vector<std::string> basis;
  std::string a, b, c;
  std::string fiducial;
  std::string state;
  std::string config_path;
  std::string dump_shots;

  int dim = 0;
  int n = 1024;
  bool ladder = false;
  bool decompose = false;
  bool maximally_mixed = false;
  std::optional<double> null_tol;
  std::optional<double> target;
  double tol = 1e-6;
  double census_tol = 1e-8;
  double overlap_floor = 1e-12;

  // Pointer / protocol.
  double g = 0.01;
  double sigma = 1.0;
  std::optional<double> x_min, x_max;
  std::optional<int> grid_n;
  int i = 0, j = 1, k = 2;
  std::int64_t shots_x = 100000;
  std::int64_t shots_p = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDomain = 3;

std::string version_string();

/// Parses argv-style arguments (without the program name), runs the command
/// and writes its output to \p out. Diagnostics go to \p err only.
/// Returns 0 on success, 2 on validation errors, 3 on numerical-domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration; throws wvphase errors.
void execute(const RunConfig& config, std::ostream& out);

}  // namespace wvphase::cli
