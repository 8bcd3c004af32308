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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qdiv/errors.hpp"
#include "qdiv/operator.hpp"
#include "qdiv/random.hpp"

using namespace qdiv;
using Catch::Approx;

namespace {

std::vector<double> sorted(const RVector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Jacobi rotations on the real symmetric embedding [[Re, -Im], [Im, Re]],
// independent of the library's eigensolver; each eigenvalue appears twice.
std::vector<double> jacobi_eigenvalues(const CMatrix& h) {
  const Index d = h.rows(), n = 2 * d;
  RMatrix a(n, n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-26) break;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev;
  for (Index i = 0; i < n; ++i) ev.push_back(a(i, i));
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (Index i = 0; i < n; i += 2) out.push_back(ev[i]);
  return out;
}

}  // namespace

TEST_CASE("trace norm of diag(1,-1) is 2") {
  RVector d(2);
  d << 1, -1;
  CHECK(trace_norm(HermitianOperator::diagonal(d)) == Approx(2.0));
}

TEST_CASE("trace norm of t times the tridiagonal block on n=4") {
  const double t = 0.3;
  CMatrix x = CMatrix::Zero(4, 4);
  for (int j = 0; j < 3; ++j) x(j, j + 1) = x(j + 1, j) = t;
  double expected = 0;
  for (int k = 1; k <= 4; ++k)
    expected += std::abs(std::cos(k * std::numbers::pi / 5));
  CHECK(expected == Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(std::abs(trace_norm(HermitianOperator(x)) - 2 * t * expected) < 1e-12);
}

TEST_CASE("trace norm matches an independent eigensolve") {
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    HermitianOperator h = random_hermitian(6, rng);
    double oracle = 0;
    for (double l : jacobi_eigenvalues(h.matrix())) oracle += std::abs(l);
    CHECK(std::abs(trace_norm(h) - oracle) < 1e-10);
  }
}

TEST_CASE("trace norm is zero only for the zero operator") {
  CHECK(trace_norm(HermitianOperator::zero(3)) == 0.0);
  Rng rng(1);
  CHECK(trace_norm(random_hermitian(3, rng)) > 0.0);
}

TEST_CASE("non-Hermitian input is rejected") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianOperator(m), NonHermitianInput);
  CHECK_THROWS_AS(trace_norm(m), NonHermitianInput);
  m(1, 0) = 1.0 + 1e-11;
  CHECK_NOTHROW(HermitianOperator(m));
}

TEST_CASE("spectral decomposition reconstructs and is unitary") {
  Rng rng(3);
  HermitianOperator h = random_hermitian(7, rng);
  SpectralDecomposition sd = eigh(h);
  CHECK(max_abs(sd.reconstruct() - h.matrix()) <= 1e-8);
  CHECK(max_abs(sd.eigenvectors.adjoint() * sd.eigenvectors -
                CMatrix::Identity(7, 7)) <= 1e-8);
  for (Index i = 1; i < 7; ++i)
    CHECK(sd.eigenvalues(i - 1) <= sd.eigenvalues(i));
}

TEST_CASE("jordan split of diagonal and positive inputs") {
  RVector d(2);
  d << 2, -3;
  JordanParts j = jordan_split(HermitianOperator::diagonal(d));
  RVector p(2), m(2);
  p << 2, 0;
  m << 0, 3;
  CHECK(max_abs(j.plus.matrix() - HermitianOperator::diagonal(p).matrix()) < 1e-12);
  CHECK(max_abs(j.minus.matrix() - HermitianOperator::diagonal(m).matrix()) < 1e-12);

  Rng rng(5);
  CMatrix g = random_ginibre(4, 4, rng);
  HermitianOperator pos = hermitian_part(g * g.adjoint());
  JordanParts jp = jordan_split(pos);
  CHECK(max_abs(jp.plus.matrix() - pos.matrix()) < 1e-10);
  CHECK(max_abs(jp.minus.matrix()) < 1e-10);
}

TEST_CASE("jordan split post-conditions on 100 random instances") {
  Rng rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    HermitianOperator h = random_hermitian(5, rng);
    JordanParts j = jordan_split(h);
    CHECK(max_abs(j.plus.matrix() - j.minus.matrix() - h.matrix()) <= 1e-8);
    CHECK(max_abs(j.plus.matrix() * j.minus.matrix()) <= 1e-8);
    CHECK(min_eigenvalue(j.plus) >= -1e-8);
    CHECK(min_eigenvalue(j.minus) >= -1e-8);
  }
}

TEST_CASE("kron of identities and diagonals") {
  CHECK(max_abs(kron(HermitianOperator::identity(2), HermitianOperator::identity(2))
                    .matrix() -
                CMatrix::Identity(4, 4)) == 0.0);
  RVector a(2), b(2), ab(4);
  a << 1, -1;
  b << 1, 1;
  ab << 1, 1, -1, -1;
  CHECK(max_abs(kron(HermitianOperator::diagonal(a), HermitianOperator::diagonal(b))
                    .matrix() -
                HermitianOperator::diagonal(ab).matrix()) == 0.0);
}

TEST_CASE("kron spectrum is the product of spectra") {
  Rng rng(13);
  HermitianOperator a = random_hermitian(3, rng), b = random_hermitian(4, rng);
  RVector ea = eigenvalues(a), eb = eigenvalues(b);
  std::vector<double> prod;
  for (Index i = 0; i < ea.size(); ++i)
    for (Index j = 0; j < eb.size(); ++j) prod.push_back(ea(i) * eb(j));
  std::sort(prod.begin(), prod.end());
  std::vector<double> got = sorted(eigenvalues(kron(a, b)));
  REQUIRE(got.size() == prod.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - prod[i]) < 1e-10);
}

TEST_CASE("trace norm is unitarily invariant") {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    HermitianOperator h = random_hermitian(5, rng);
    CMatrix u = random_unitary(5, rng);
    CHECK(std::abs(trace_norm(hermitian_part(u * h.matrix() * u.adjoint())) -
                   trace_norm(h)) < 1e-9);
  }
}

TEST_CASE("trace norm equals trace on positive operators") {
  Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    CMatrix g = random_ginibre(4, 4, rng);
    HermitianOperator p = hermitian_part(g * g.adjoint());
    CHECK(trace_norm(p) == Approx(p.trace()).epsilon(1e-12));
  }
}

TEST_CASE("near-zero eigenvalues are clamped in the PSD test") {
  RVector d(3);
  d << 1.0, 0.0, -1e-10;
  CHECK(is_psd(HermitianOperator::diagonal(d)));
  d(2) = -1e-6;
  CHECK_FALSE(is_psd(HermitianOperator::diagonal(d)));
}
