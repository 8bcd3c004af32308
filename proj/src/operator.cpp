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

#include "qdiv/operator.hpp"

#include <algorithm>

#include "qdiv/errors.hpp"

namespace qdiv {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("Hermitian operator must be square");
  return max_abs(m - m.adjoint());
}

HermitianOperator::HermitianOperator(const CMatrix& entries, double tol) {
  if (entries.rows() < 1)
    throw DimensionMismatch("Hermitian operator needs dim >= 1");
  double defect = hermiticity_defect(entries);
  if (defect > tol) throw NonHermitianInput(defect);
  m_ = (entries + entries.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::zero(Index d) {
  return HermitianOperator(CMatrix::Zero(d, d), Trusted{});
}

HermitianOperator HermitianOperator::identity(Index d) {
  return HermitianOperator(CMatrix::Identity(d, d), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(const RVector& diag) {
  return HermitianOperator(diag.cast<Complex>().asDiagonal().toDenseMatrix(),
                           Trusted{});
}

HermitianOperator HermitianOperator::projector(const CVector& v) {
  return HermitianOperator(v * v.adjoint(), Trusted{});
}

HermitianOperator HermitianOperator::unit_difference(Index d, Index i,
                                                     Index j) {
  CMatrix m = CMatrix::Zero(d, d);
  m(i, i) += 1.0;
  m(j, j) -= 1.0;
  return HermitianOperator(std::move(m), Trusted{});
}

HermitianOperator HermitianOperator::operator+(
    const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("operator sum");
  return HermitianOperator(m_ + o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(
    const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("operator difference");
  return HermitianOperator(m_ - o.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s, Trusted{});
}

HermitianOperator hermitian_part(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimensionMismatch("Hermitian part of a non-square matrix");
  return HermitianOperator((m + m.adjoint()) * 0.5,
                           HermitianOperator::Trusted{});
}

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

SpectralDecomposition eigh(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
  return {es.eigenvalues(), es.eigenvectors()};
}

RVector eigenvalues(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double eig_threshold(const CMatrix& m) { return kEigTol * max_abs(m); }

double trace_norm(const HermitianOperator& h) {
  return eigenvalues(h).cwiseAbs().sum();
}

double trace_norm(const CMatrix& m, double tol) {
  return trace_norm(HermitianOperator(m, tol));
}

double min_eigenvalue(const HermitianOperator& h) {
  return eigenvalues(h).minCoeff();
}

bool is_psd(const HermitianOperator& h, double tol) {
  double lmin = min_eigenvalue(h);
  if (std::abs(lmin) <= eig_threshold(h.matrix())) lmin = 0.0;
  return lmin >= -tol;
}

JordanParts jordan_split(const HermitianOperator& h) {
  SpectralDecomposition sd = eigh(h);
  const double thr = eig_threshold(h.matrix());
  const Index d = h.dim();
  RVector pos = RVector::Zero(d), neg = RVector::Zero(d);
  for (Index i = 0; i < d; ++i) {
    double l = sd.eigenvalues(i);
    if (l > thr)
      pos(i) = l;
    else if (l < -thr)
      neg(i) = -l;
  }
  const CMatrix& v = sd.eigenvectors;
  return {hermitian_part(v * pos.cast<Complex>().asDiagonal() * v.adjoint()),
          hermitian_part(v * neg.cast<Complex>().asDiagonal() * v.adjoint())};
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return hermitian_part(kron(a.matrix(), b.matrix()));
}

}  // namespace qdiv
