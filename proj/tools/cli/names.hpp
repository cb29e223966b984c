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

#include "wvphase/linalg.hpp"

namespace wvphase::cli {

/// Resolves a state token. Built-in names:
///   z+ z- x+ x- y+ y-     qubit eigenstates of the Pauli operators
///   e<k> or e<k>:<d>      computational basis state (d defaults to 2)
///   haar:<d>:<seed>       Haar-random state
///   sic:<d>:<index>       state of the built-in SIC
/// Anything else is read as a JSON ket file.
Ket resolve_state(const std::string& token);

/// Resolves an operator token: sigmax, sigmay, sigmaz, identity:<d>,
/// proj:<state token>, random:<d>:<seed>, or a JSON operator file.
HermitianOperator resolve_operator(const std::string& token);

}  // namespace wvphase::cli
