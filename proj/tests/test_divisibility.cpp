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
#include <cstdlib>

#include "qdiv/divisibility.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/idempotent.hpp"
#include "qdiv/presets.hpp"
#include "qdiv/random.hpp"
#include "qdiv/schur.hpp"

using namespace qdiv;

namespace {

Index svd_rank(const CMatrix& m, double rcond = 1e-10) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector& s = svd.singularValues();
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > rcond * s(0)) ++r;
  return r;
}

// Ker S_s is contained in Ker S_t iff stacking S_t under S_s adds no rank.
bool rank_oracle(const DynamicalFamily& fam, double s, double t) {
  const CMatrix a = fam.at(s).superoperator();
  const CMatrix b = fam.at(t).superoperator();
  CMatrix stacked(a.rows() + b.rows(), a.cols());
  stacked << a, b;
  return svd_rank(a) == svd_rank(stacked);
}

DynamicalFamily constant_family(const Channel& ch) {
  return DynamicalFamily("constant", ch.dim_in(), {0.0, 1.0},
                         [ch](double) { return ch; });
}

}  // namespace

TEST_CASE("unitary family gives zero derivatives") {
  DynamicalFamily fam = make_channel_family("unitary", {3, 0, 4});
  std::vector<double> grid = linspace(0.1, 0.9, 9);
  const double h = default_step(fam.domain());
  DivisibilityReport p = p_divisibility_scan(fam, default_witnesses(3, 1), grid, h);
  CHECK(p.verdict == Verdict::PEvidence);
  CHECK_FALSE(p.witness.has_value());
  for (const SweepRow& r : p.rows) CHECK(std::abs(r.derivative) < 1e-9);
  CHECK(p.rows.size() == grid.size() * (3 + 40));

  DivisibilityReport c =
      cp_divisibility_scan(fam, preset_cp_witnesses("unitary", fam, 2), grid, h);
  CHECK(c.verdict == Verdict::CpEvidence);
  for (const SweepRow& r : c.rows) CHECK(std::abs(r.derivative) < 1e-9);
}

TEST_CASE("constant family gives zero derivatives") {
  Rng rng(3);
  DynamicalFamily fam =
      constant_family(Channel::from_kraus(random_kraus(3, 2, rng)));
  DivisibilityReport rep =
      p_divisibility_scan(fam, default_witnesses(3, 2), linspace(0.2, 0.8, 5), 1e-4);
  CHECK(rep.verdict == Verdict::PEvidence);
  CHECK(std::abs(rep.max_derivative) < 1e-9);
}

TEST_CASE("Schur family is not P-divisible and not CP-divisible") {
  for (Index n : {4, 6}) {
    DynamicalFamily fam = schur_family({n, {0.0, 0.5}});
    std::vector<double> grid = linspace(0.05, 0.45, 9);
    DivisibilityReport p =
        p_divisibility_scan(fam, {schur_witness(n, n)}, grid, 5e-5);
    CHECK(p.verdict == Verdict::NotPDivisible);
    REQUIRE(p.witness.has_value());
    CHECK(std::abs(p.witness->derivative - witness_slope(n)) < 1e-6);
    DivisibilityReport c =
        cp_divisibility_scan(fam, {schur_cp_witness(n, n)}, grid, 5e-5);
    CHECK(c.verdict == Verdict::NotCpDivisible);
    CHECK(std::abs(c.witness->derivative - witness_slope(n)) < 1e-6);
  }
}

TEST_CASE("generic Kraus family grows the Bell-difference witness as 4t") {
  DynamicalFamily fam = make_channel_family("generic-noncp", {});
  HermitianOperator y = bell_difference_witness(4);
  for (double t : linspace(0.1, 0.9, 17))
    CHECK(std::abs(trace_norm(apply_extended(fam.at(t), y, 4)) - 4 * t) < 1e-9);
  DivisibilityReport rep =
      cp_divisibility_scan(fam, {y}, linspace(0.1, 0.9, 17), 1e-4);
  CHECK(rep.verdict == Verdict::NotCpDivisible);
  CHECK(std::abs(rep.witness->derivative - 4.0) < 1e-4);
}

TEST_CASE("E3 sign convention keeps the Kraus family trace preserving") {
  for (double t : {0.0, 0.3, 1.0}) CHECK(tp_defect(generic_noncp_channel(5, t)) < 1e-14);
}

TEST_CASE("scan errors") {
  DynamicalFamily fam = make_channel_family("generic-noncp", {});
  CHECK_THROWS_AS(p_divisibility_scan(fam, default_witnesses(4, 1), {0.0}, 1e-4),
                  DomainExceeded);
  CHECK_THROWS_AS(cp_divisibility_scan(fam, default_witnesses(4, 1), {0.5}, 1e-4),
                  DimensionMismatch);
  CHECK_THROWS_AS(fam.at(1.5), DomainExceeded);
}

TEST_CASE("family construction rejects non-CP generators") {
  CHECK_THROWS_AS(DynamicalFamily("transpose", 2, {0.0, 1.0},
                                  [](double) { return Channel::transpose(2); }),
                  InvalidFamily);
  try {
    DynamicalFamily("late", 2, {0.0, 1.0}, [](double t) {
      return t > 0.55 ? Channel::transpose(2) : Channel::identity(2);
    });
    FAIL("expected InvalidFamily");
  } catch (const InvalidFamily& e) {
    CHECK(e.t == Catch::Approx(0.6));
  }
}

TEST_CASE("violation witnesses survive a finer step") {
  DynamicalFamily fam = schur_family({5, {0.0, 0.5}});
  DivisibilityReport rep = p_divisibility_scan(
      fam, default_witnesses(5, 9), linspace(0.1, 0.4, 7), 5e-5);
  REQUIRE(rep.verdict == Verdict::NotPDivisible);
  double finer = p_derivative(fam, rep.witness->op, rep.witness->t, 5e-6);
  CHECK(finer > kSlopeTol / 2);

  DynamicalFamily g = make_channel_family("generic-noncp", {});
  DivisibilityReport c = cp_divisibility_scan(g, {bell_difference_witness(4)},
                                              linspace(0.2, 0.8, 4), 1e-4);
  CHECK(cp_derivative(g, c.witness->op, c.witness->t, 1e-5) > kSlopeTol / 2);
}

TEST_CASE("semigroup families show no growth") {
  for (Index d : {2, 3}) {
    DynamicalFamily fam = make_channel_family("depolarizing", {static_cast<int>(d)});
    std::vector<double> grid = linspace(0.1, 1.9, 10);
    const double h = default_step(fam.domain());
    CHECK(p_divisibility_scan(fam, default_witnesses(d, 4), grid, h).max_derivative <=
          kSlopeTol);
    CHECK(cp_divisibility_scan(fam, preset_cp_witnesses("depolarizing", fam, 4), grid, h)
              .max_derivative <= kSlopeTol);
  }
  DynamicalFamily cp = make_channel_family("idempotent-cp", {});
  CHECK(p_divisibility_scan(cp, default_witnesses(4, 5), linspace(0.1, 0.9, 9), 1e-4)
            .max_derivative <= kSlopeTol);
}

TEST_CASE("scans are identical across thread counts") {
  DynamicalFamily fam = make_channel_family("unitary", {3, 0, 8});
  std::vector<HermitianOperator> w = default_witnesses(3, 8);
  std::vector<double> grid = linspace(0.1, 0.9, 12);
  setenv("QDIV_THREADS", "1", 1);
  DivisibilityReport a = p_divisibility_scan(fam, w, grid, 1e-4);
  setenv("QDIV_THREADS", "3", 1);
  DivisibilityReport b = p_divisibility_scan(fam, w, grid, 1e-4);
  unsetenv("QDIV_THREADS");
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].t == b.rows[i].t);
    CHECK(a.rows[i].witness_id == b.rows[i].witness_id);
    CHECK(a.rows[i].derivative == b.rows[i].derivative);
  }
}

TEST_CASE("kernel inclusion on rank-collapsing families") {
  DynamicalFamily collapse = kernel_collapse_family(2);
  DynamicalFamily resurrect = kernel_resurrect_family(2);
  CHECK(kernel_inclusion_divisible(collapse, 1.0, 2.0));
  CHECK_FALSE(kernel_inclusion_divisible(resurrect, 1.0, 2.0));
  CHECK(rank_oracle(collapse, 1.0, 2.0));
  CHECK_FALSE(rank_oracle(resurrect, 1.0, 2.0));
  CHECK(kernel_inclusion_divisible(collapse, 0.2, 0.7));
  CHECK(rank_oracle(collapse, 0.2, 0.7));
}

TEST_CASE("kernel inclusion fails when the identity component returns") {
  CoefficientFunction f = [](double t) {
    double a = std::abs(1.0 - 2.0 * t);
    return Coeffs4{a, 0.0, 1.0 - a, 0.0};
  };
  DynamicalFamily fam = make_family(f, 2, 2, {0.0, 1.0});
  CHECK_FALSE(kernel_inclusion_divisible(fam, 0.5, 0.8));
  CHECK_FALSE(rank_oracle(fam, 0.5, 0.8));
  CHECK(kernel_inclusion_divisible(fam, 0.1, 0.3));
}

TEST_CASE("intermediate map of the unitary family") {
  Rng rng(21);
  SpectralDecomposition h = eigh(random_hermitian(3, rng));
  auto u = [h](double t) {
    CVector ph = (h.eigenvalues * -t).unaryExpr(
        [](double x) { return std::polar(1.0, x); });
    return CMatrix(h.eigenvectors * ph.asDiagonal() * h.eigenvectors.adjoint());
  };
  DynamicalFamily fam("unitary", 3, {0.0, 1.0},
                      [u](double t) { return Channel::unitary(u(t)); });
  IntermediateMap im = intermediate_map(fam, 0.2, 0.7);
  CHECK(im.cp);
  CHECK(im.p);
  CHECK(max_entry_distance(im.map, Channel::unitary(u(0.7) * u(0.2).adjoint())) <
        1e-9);
  CHECK(max_entry_distance(compose(im.map, fam.at(0.2)), fam.at(0.7)) <= 1e-8);
  CHECK(tp_defect(im.map) <= 1e-8);

  IntermediateMap same = intermediate_map(fam, 0.4, 0.4);
  CHECK(max_entry_distance(same.map, Channel::identity(3)) < 1e-10);
  CHECK(same.cp);
}

TEST_CASE("intermediate map of an idempotent family recovers the divisor") {
  DynamicalFamily fam = make_channel_family("idempotent-cp", {});
  CoefficientFunction f = idempotent_coefficients("idempotent-cp");
  IntermediateMap im = intermediate_map(fam, 0.3, 0.8);
  BasisProjection proj = project_onto_basis(im.map, 2, 2);
  Coeffs4 expect = divisor_coeffs(f(0.3), f(0.8));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(proj.coeffs[i] - expect[i]) < 1e-9);
  CHECK(proj.residual < 1e-9);
  CHECK(im.cp);
  CHECK(max_entry_distance(compose(im.map, fam.at(0.3)), fam.at(0.8)) <= 1e-8);
}

TEST_CASE("intermediate map refuses a singular earlier map") {
  CHECK_THROWS_AS(intermediate_map(kernel_collapse_family(2), 1.0, 1.5),
                  SingularChannel);
}

TEST_CASE("verdict names round-trip") {
  for (Verdict v : {Verdict::NotPDivisible, Verdict::NotCpDivisible,
                    Verdict::PEvidence, Verdict::CpEvidence,
                    Verdict::DivisibleKernelOk, Verdict::NotDivisible})
    CHECK(verdict_from_string(to_string(v)) == v);
}
