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

#include <cmath>
#include <numbers>

#include "qdiv/errors.hpp"
#include "qdiv/schur.hpp"

using namespace qdiv;

TEST_CASE("toeplitz spectrum small cases") {
  RVector s = toeplitz_spectrum(2, 0.25);
  CHECK(std::abs(s(0) - 0.75) < 1e-15);
  CHECK(std::abs(s(1) - 1.25) < 1e-15);
  RVector id = toeplitz_spectrum(7, 0.0);
  for (Index i = 0; i < 7; ++i) CHECK(id(i) == 1.0);
}

TEST_CASE("toeplitz spectrum matches eigensolve") {
  for (Index n : {1, 2, 3, 10, 50, 100}) {
    for (double t : {0.0, 0.13, 0.3, 0.49, 0.5}) {
      RVector cf = toeplitz_spectrum(n, t);
      RVector dense = eigenvalues(toeplitz_a(n, t));
      REQUIRE(cf.size() == dense.size());
      CHECK((cf - dense).cwiseAbs().maxCoeff() <= 1e-10);
      if (t < 0.5) CHECK(dense.minCoeff() > 0);
    }
  }
  // Sturm-count oracle: eigenvalues of a symmetric tridiagonal matrix below x
  auto count_below = [](Index n, double t, double x) {
    int c = 0;
    double q = 1.0 - x;
    if (q < 0) ++c;
    for (Index i = 1; i < n; ++i) {
      q = (1.0 - x) - t * t / q;
      if (q < 0) ++c;
    }
    return c;
  };
  RVector s = toeplitz_spectrum(50, 0.49);
  for (Index i = 0; i < 50; ++i) {
    CHECK(count_below(50, 0.49, s(i) - 1e-9) == i);
    CHECK(count_below(50, 0.49, s(i) + 1e-9) == i + 1);
  }
}

TEST_CASE("schur channel") {
  // t = 0 keeps only the diagonal
  CHECK(schur_channel(5, 0.0).apply(CMatrix::Ones(5, 5)) == CMatrix::Identity(5, 5));
  Channel c = schur_channel(6, 0.3);
  CHECK(c.trace_preserving());
  CHECK(is_cp(c));
  CHECK_THROWS_AS(schur_channel(4, 0.51), OutsideValidityWindow);
  CHECK_THROWS_AS(schur_channel(4, -0.01), OutsideValidityWindow);
  HermitianOperator x = schur_witness(4, 6);
  CHECK(max_abs(c.apply(x.matrix()) - 0.3 * x.matrix()) < 1e-15);
  CHECK(x.matrix().block(4, 0, 2, 6).isZero());
}

TEST_CASE("witness slope closed forms") {
  CHECK(std::abs(witness_slope(2) - 2.0) < 1e-14);
  CHECK(std::abs(witness_slope(4) - 2.0 * std::sqrt(5.0)) < 1e-14);
  CHECK(std::abs(witness_slope(4) - trace_norm(schur_witness(4, 4))) < 1e-12);
  for (Index n = 2; n < 40; ++n) CHECK(witness_slope(n + 1) > witness_slope(n));
}

TEST_CASE("witness growth is linear with the closed-form slope") {
  for (Index n : {2, 4, 9}) {
    std::vector<GrowthRow> rows = witness_growth(n, linspace(0.05, 0.45, 9));
    for (const GrowthRow& r : rows) {
      CHECK(std::abs(r.trace_norm - r.t * witness_slope(n)) < 1e-10);
      CHECK(std::abs(r.derivative - witness_slope(n)) <= kSlopeTol);
    }
  }
}

TEST_CASE("schur family verdicts") {
  for (Index n : {4, 8}) {
    DynamicalFamily fam = schur_family({n, {0.0, 0.5}});
    DivisibilityReport p = p_divisibility_scan(fam, {schur_witness(n, n)},
                                               linspace(0.05, 0.45, 9), 1e-4);
    CHECK(p.verdict == Verdict::NotPDivisible);
    CHECK(std::abs(p.max_derivative - witness_slope(n)) <= kSlopeTol);

    DivisibilityReport cp = cp_divisibility_scan(fam, {schur_cp_witness(n, n)},
                                                 linspace(0.05, 0.45, 5), 1e-4);
    CHECK(cp.verdict == Verdict::NotCpDivisible);
  }
}

TEST_CASE("verdict stable under larger truncation") {
  DynamicalFamily small = schur_family({6, {0.0, 0.5}});
  DynamicalFamily big = schur_family({16, {0.0, 0.5}});
  auto grid = linspace(0.1, 0.4, 4);
  DivisibilityReport a = p_divisibility_scan(small, {schur_witness(6, 6)}, grid, 1e-4);
  DivisibilityReport b = p_divisibility_scan(big, {schur_witness(6, 16)}, grid, 1e-4);
  CHECK(a.verdict == b.verdict);
  CHECK(std::abs(a.max_derivative - b.max_derivative) < 1e-8);
}
