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

#include "qdiv/random.hpp"

namespace qdiv {

CMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

HermitianOperator random_hermitian(Index d, Rng& rng) {
  return hermitian_part(random_ginibre(d, d, rng));
}

CMatrix random_unitary(Index d, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_ginibre(d, d, rng));
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR();
  // fix column phases so the distribution is Haar
  for (Index j = 0; j < d; ++j) {
    double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

CVector random_pure_state(Index d, Rng& rng) {
  CVector v = random_ginibre(d, 1, rng);
  return v / v.norm();
}

HermitianOperator random_projector_difference(Index d, Rng& rng) {
  CVector psi = random_pure_state(d, rng);
  CVector phi = random_pure_state(d, rng);
  return hermitian_part(psi * psi.adjoint() - phi * phi.adjoint());
}

std::vector<CMatrix> random_kraus(Index d, int count, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_ginibre(d * count, d, rng));
  CMatrix v = qr.householderQ() * CMatrix::Identity(d * count, d);
  std::vector<CMatrix> out;
  for (int j = 0; j < count; ++j) out.push_back(v.block(j * d, 0, d, d));
  return out;
}

}  // namespace qdiv
