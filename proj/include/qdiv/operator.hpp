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

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qdiv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermTol = 1e-10;
inline constexpr double kEigTol = 1e-8;

double max_abs(const CMatrix& m);
double hermiticity_defect(const CMatrix& m);

// Dense Hermitian matrix. Construction checks |H - H^dag|_max <= tol and
// stores the symmetrized matrix.
class HermitianOperator {
 public:
  explicit HermitianOperator(const CMatrix& entries, double tol = kHermTol);

  static HermitianOperator zero(Index d);
  static HermitianOperator identity(Index d);
  static HermitianOperator diagonal(const RVector& diag);
  // |v><v|
  static HermitianOperator projector(const CVector& v);
  // E_ii - E_jj
  static HermitianOperator unit_difference(Index d, Index i, Index j);

  Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  struct Trusted {};
  HermitianOperator(CMatrix m, Trusted) : m_(std::move(m)) {}
  friend HermitianOperator hermitian_part(const CMatrix& m);

  CMatrix m_;
};

// (M + M^dag)/2 without a tolerance check.
HermitianOperator hermitian_part(const CMatrix& m);

struct SpectralDecomposition {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;
  CMatrix reconstruct() const;
};

SpectralDecomposition eigh(const HermitianOperator& h);
RVector eigenvalues(const HermitianOperator& h);

// Absolute clamping threshold kEigTol * max|entry|.
double eig_threshold(const CMatrix& m);

double trace_norm(const HermitianOperator& h);
// Trace norm of a matrix checked for Hermiticity first.
double trace_norm(const CMatrix& m, double tol = kHermTol);

double min_eigenvalue(const HermitianOperator& h);
// lambda_min >= -tol after clamping
bool is_psd(const HermitianOperator& h, double tol = 0.0);

struct JordanParts {
  HermitianOperator plus;
  HermitianOperator minus;
};
JordanParts jordan_split(const HermitianOperator& h);

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace qdiv
