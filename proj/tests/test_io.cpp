// Copyright 2026 The qdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qdiv/io.hpp"
#include "qdiv/random.hpp"

using namespace qdiv;

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567}) {
    std::string s = format_double(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("channel JSON round trip") {
  Rng rng(21);
  Channel k = Channel::from_kraus(random_kraus(3, 2, rng));
  Json jk = channel_to_json(k);
  CHECK(jk.contains("kraus"));
  CHECK(jk.at("dim_in") == 3);
  Channel k2 = channel_from_json(Json::parse(jk.dump()));
  CHECK(max_entry_distance(k, k2) <= 1e-12);

  Channel s = Channel::transpose(3);
  Json js = channel_to_json(s);
  CHECK(js.contains("super"));
  CHECK(max_entry_distance(s, channel_from_json(Json::parse(js.dump()))) <= 1e-12);

  Json bad = jk;
  bad["dim_in"] = 4;
  CHECK_THROWS(channel_from_json(bad));
}

TEST_CASE("complex matrices use [re, im] pairs") {
  CMatrix m(1, 2);
  m << Complex(1, 2), Complex(-3, 0);
  Json j = complex_matrix_to_json(m);
  CHECK(j[0][0][0] == 1.0);
  CHECK(j[0][0][1] == 2.0);
  CHECK(complex_matrix_from_json(j) == m);
}

TEST_CASE("report JSON and sweep CSV") {
  DivisibilityReport rep;
  rep.verdict = Verdict::NotPDivisible;
  rep.grid = {0.1, 0.2};
  rep.max_derivative = 1.0 / 3.0;
  rep.witness = Witness{0.2, HermitianOperator::diagonal(RVector::Ones(2)), 1.0 / 3.0, 0};
  rep.rows = {{0.1, 0, 0.5, -0.25, false}, {0.2, 0, 0.6, 1.0 / 3.0, true}};
  Json j = report_to_json(rep);
  CHECK(j.at("verdict") == "NOT_P_DIVISIBLE");
  CHECK(j.at("witness_t") == 0.2);
  CHECK(j.at("grid").size() == 2);

  std::ostringstream os;
  write_sweep_csv(os, rep);
  CHECK(os.str() ==
        "t,witness_id,value,derivative,flag\n"
        "0.10000000000000001,0,0.5,-0.25,0\n"
        "0.20000000000000001,0,0.59999999999999998,0.33333333333333331,1\n");

  DivisibilityReport clean;
  Json jc = report_to_json(clean);
  CHECK(jc.at("witness_t").is_null());
}

TEST_CASE("gaussian JSON round trip") {
  GaussianPair g(0.5 * RMatrix::Identity(2, 2), 0.75 * RMatrix::Identity(2, 2));
  GaussianPair back = gaussian_from_json(Json::parse(gaussian_to_json(g).dump()));
  CHECK(back.X() == g.X());
  CHECK(back.Y() == g.Y());
}

TEST_CASE("det and growth CSV headers") {
  std::ostringstream a, b;
  write_det_csv(a, DetScanReport{{{1.0, 2.0, 0.5, true}}, true, 1.0});
  CHECK(a.str() == "t,det,ddet,violation\n1,2,0.5,1\n");
  write_growth_csv(b, {{0.25, 1.0, 4.0}}, 4);
  CHECK(b.str() == "t,trace_norm,derivative,n\n0.25,1,4,4\n");
}
