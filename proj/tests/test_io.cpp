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
#include <cstdio>
#include <fstream>

#include "gtest/gtest.h"
#include "wvphase/errors.hpp"

using namespace wvphase;
using io::Json;

TEST(KetJson, RoundTrip) {
  const Ket psi = haar_random_ket(3, 9);
  const Ket back = io::ket_from_json(io::parse(io::ket_to_json(psi).dump()));
  ASSERT_EQ(back.dim(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back[i], psi[i]);
}

TEST(KetJson, NormalizesInput) {
  const Ket k = io::ket_from_json(io::parse(R"({"dim": 2, "amplitudes": [[3, 0], [0, 4]]})"));
  EXPECT_NEAR(k[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(k[1].imag(), 0.8, 1e-15);
}

TEST(KetJson, Rejections) {
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": 3, "amplitudes": [[1, 0], [0, 1]]})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"amplitudes": [[1, 0]]})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": 1, "amplitudes": [[1]]})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": 1, "amplitudes": [[1, "x"]]})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": "two", "amplitudes": []})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": 0, "amplitudes": []})")), ValidationError);
  EXPECT_THROW(io::ket_from_json(io::parse(R"({"dim": 2, "amplitudes": [[0, 0], [0, 0]]})")), DomainError);
}

TEST(OperatorJson, RoundTripAndHermiticity) {
  const HermitianOperator a = random_hermitian(3, 4);
  const HermitianOperator back = io::operator_from_json(io::parse(io::operator_to_json(a).dump()));
  EXPECT_EQ(back.matrix().max_abs_diff(a.matrix()), 0.0);
  EXPECT_THROW(io::operator_from_json(io::parse(R"({"dim": 2, "entries": [[[0,0],[1,0]],[[0,0],[0,0]]]})")),
               ValidationError);
  EXPECT_THROW(io::operator_from_json(io::parse(R"({"dim": 2, "entries": [[[0,0],[1,0]]]})")), ValidationError);
}

TEST(ProtocolConfigJson, RoundTrip) {
  ProtocolConfig c;
  c.dim = 2;
  c.i = 3;
  c.j = 1;
  c.k = 0;
  c.g = 0.02;
  c.sigma = 1.5;
  c.shots_x = 1000;
  c.shots_p = 2000;
  c.seed = 18446744073709551615ull;
  c.grid = Grid{-13.0, 13.5, 1001};
  const ProtocolConfig back = io::protocol_config_from_json(io::parse(io::protocol_config_to_json(c).dump()));
  EXPECT_EQ(back.dim, 2);
  EXPECT_EQ(back.i, 3);
  EXPECT_EQ(back.j, 1);
  EXPECT_EQ(back.k, 0);
  EXPECT_EQ(back.g, 0.02);
  EXPECT_EQ(back.sigma, 1.5);
  EXPECT_EQ(back.shots_x, 1000);
  EXPECT_EQ(back.shots_p, 2000);
  EXPECT_EQ(back.seed, c.seed);
  ASSERT_TRUE(back.grid.has_value());
  EXPECT_EQ(back.grid->n, 1001);
  EXPECT_EQ(io::protocol_config_to_json(back).dump(), io::protocol_config_to_json(c).dump());
}

TEST(ProtocolConfigJson, Rejections) {
  const std::string base = R"("dim": 2, "i": 0, "j": 1, "k": 2, "g": 0.01, "sigma": 1, "shots_x": 10, "shots_p": 10)";
  EXPECT_NO_THROW(io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": 7})")));
  EXPECT_THROW(io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": 7, "shots_y": 3})")), ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse("{" + base + "}")), ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": "seven"})")), ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": -1})")), ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": 1.5})")), ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse(
                   R"({"dim": 2, "i": 3000000000, "j": 1, "k": 2, "g": 0.01, "sigma": 1, "shots_x": 10, "shots_p": 10, "seed": 7})")),
               ValidationError);
  EXPECT_THROW(
      io::protocol_config_from_json(io::parse("{" + base + R"(, "seed": 7, "grid": {"x_min": 1, "x_max": 0, "n": 10}})")),
      ValidationError);
  EXPECT_THROW(io::protocol_config_from_json(io::parse("[1, 2]")), ValidationError);
}

TEST(Parse, InvalidJsonAndMissingFile) {
  EXPECT_THROW(io::parse("{not json"), ValidationError);
  EXPECT_THROW(io::read_json_file("/nonexistent/path/state.json"), ValidationError);
  const std::string path = ::testing::TempDir() + "wvphase_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 2, "amplitudes": [[1, 0], [1, 0]]})";
  }
  EXPECT_NEAR(io::ket_from_json(io::read_json_file(path))[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
  std::remove(path.c_str());
}

TEST(Format, Doubles) {
  EXPECT_EQ(io::format_double(-0.0), "0.0");
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_EQ(io::format_double(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(std::stod(io::format_double(std::acos(-1.0))), std::acos(-1.0));
}

TEST(Format, WeakValueJsonFields) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const WeakValueResult r =
      projector_weak_value(basis_ket(2, 0), Ket::normalize({r2, r2}), Ket::normalize({r2, Complex(0.0, r2)}));
  const Json j = io::to_json(r);
  const std::vector<std::string> keys{"re", "im", "modulus", "argument", "postselect_prob", "bargmann3"};
  std::vector<std::string> got;
  for (const auto& [key, value] : j.items()) got.push_back(key);
  EXPECT_EQ(got, keys);
  EXPECT_NEAR(j["re"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["im"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["bargmann3"][0].get<double>(), 0.25, 1e-15);
  EXPECT_NEAR(j["bargmann3"][1].get<double>(), 0.25, 1e-15);
  const Json plain = io::to_json(weak_value(pauli_x(), basis_ket(2, 0), Ket::normalize({r2, Complex(0.0, r2)})));
  EXPECT_TRUE(plain["bargmann3"].is_null());
}

TEST(Format, CensusAndTableCsv) {
  const SicSet set = builtin_sic(2);
  const std::string census = io::census_csv(triple_phase_census(set));
  EXPECT_EQ(census.substr(0, census.find('\n')), "theta_rad,cos_theta,multiplicity");
  EXPECT_NE(census.find(",4\n"), std::string::npos);
  const std::string table = io::triple_table_csv(set);
  EXPECT_EQ(table.substr(0, table.find('\n')), "i,j,k,re,im,modulus,arg_rad,arg_deg");
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 1 + 4 * 3 * 2);
  EXPECT_EQ(table.find("1,0,0"), std::string::npos);
}

TEST(Format, ShotsCsv) {
  const std::vector<ShotRecord> shots{{ShotPool::position, 0, true, 0.25}, {ShotPool::momentum, 5, false, 0.0}};
  EXPECT_EQ(io::shots_csv(shots), "pool,index,accepted,value\nx,0,1,0.25\np,5,0,0.0\n");
}
