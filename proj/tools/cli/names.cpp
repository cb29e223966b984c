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
#include "cli/names.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "wvphase/errors.hpp"
#include "wvphase/io.hpp"
#include "wvphase/sic.hpp"

namespace wvphase::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T to_number(const std::string& text, const std::string& token) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("malformed number '" + text + "' in token '" + token + "'");
  }
  return value;
}

}  // namespace

Ket resolve_state(const std::string& token) {
  const double r = 1.0 / std::sqrt(2.0);
  if (token == "z+") return basis_ket(2, 0);
  if (token == "z-") return basis_ket(2, 1);
  if (token == "x+") return Ket::normalize({r, r});
  if (token == "x-") return Ket::normalize({r, -r});
  if (token == "y+") return Ket::normalize({r, Complex(0.0, r)});
  if (token == "y-") return Ket::normalize({r, Complex(0.0, -r)});

  if (token.size() > 1 && token[0] == 'e' && std::isdigit(static_cast<unsigned char>(token[1]))) {
    const auto parts = split(token.substr(1), ':');
    if (parts.size() > 2) throw ValidationError("malformed basis-state token '" + token + "'");
    const int index = to_number<int>(parts[0], token);
    const int d = parts.size() == 2 ? to_number<int>(parts[1], token) : 2;
    return basis_ket(d, index);
  }
  const auto parts = split(token, ':');
  if (parts.size() == 3 && parts[0] == "haar") {
    return haar_random_ket(to_number<int>(parts[1], token), to_number<std::uint64_t>(parts[2], token));
  }
  if (parts.size() == 3 && parts[0] == "sic") {
    const SicSet set = builtin_sic(to_number<int>(parts[1], token));
    const int index = to_number<int>(parts[2], token);
    if (index < 0 || static_cast<std::size_t>(index) >= set.size()) {
      throw ValidationError("SIC index out of range in token '" + token + "'");
    }
    return set[static_cast<std::size_t>(index)];
  }
  return io::ket_from_json(io::read_json_file(token));
}

HermitianOperator resolve_operator(const std::string& token) {
  if (token == "sigmax") return pauli_x();
  if (token == "sigmay") return pauli_y();
  if (token == "sigmaz") return pauli_z();
  if (token.rfind("proj:", 0) == 0) return Projector{resolve_state(token.substr(5))}.as_operator();
  const auto parts = split(token, ':');
  if (parts.size() == 2 && parts[0] == "identity") {
    const int d = to_number<int>(parts[1], token);
    if (d < 1) throw ValidationError("identity dimension must be >= 1");
    return HermitianOperator(Matrix::identity(static_cast<std::size_t>(d)));
  }
  if (parts.size() == 3 && parts[0] == "random") {
    return random_hermitian(to_number<int>(parts[1], token), to_number<std::uint64_t>(parts[2], token));
  }
  return io::operator_from_json(io::read_json_file(token));
}

}  // namespace wvphase::cli
