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

#include <cstdint>
#include <optional>
#include <vector>

#include "qdiv/operator.hpp"

namespace qdiv {

inline constexpr double kChannelTol = 1e-10;
inline constexpr double kCpTol = 1e-9;
inline constexpr double kContractTol = 1e-9;
inline constexpr double kRcond = 1e-10;

// vec is column stacking: entry (r, c) of a d x d matrix sits at r + c*d, and
// X -> A X B has superoperator kron(B^T, A).
CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, Index rows, Index cols);

class Channel {
 public:
  Channel(CMatrix super, Index dim_in, Index dim_out);
  static Channel from_superoperator(CMatrix super);
  static Channel from_kraus(std::vector<CMatrix> kraus);
  static Channel identity(Index d);
  static Channel unitary(const CMatrix& u);
  static Channel transpose(Index d);

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const CMatrix& superoperator() const { return super_; }
  const std::optional<std::vector<CMatrix>>& kraus() const { return kraus_; }
  bool trace_preserving() const { return tp_; }
  bool hermiticity_preserving() const { return hp_; }

  CMatrix apply(const CMatrix& x) const;
  CMatrix apply_kraus(const CMatrix& x) const;

 private:
  CMatrix super_;
  Index dim_in_ = 0, dim_out_ = 0;
  std::optional<std::vector<CMatrix>> kraus_;
  bool tp_ = false, hp_ = false;
};

HermitianOperator apply(const Channel& ch, const HermitianOperator& x);

// sum_j w_j ch_j
Channel linear_combination(const std::vector<double>& weights,
                           const std::vector<const Channel*>& channels);

class ChoiMatrix {
 public:
  explicit ChoiMatrix(CMatrix m) : m_(std::move(m)) {}
  const CMatrix& matrix() const { return m_; }
  HermitianOperator hermitian(double tol = kHermTol) const {
    return HermitianOperator(m_, tol);
  }
  // sum_i |ii>, not normalized
  static constexpr bool normalized = false;

 private:
  CMatrix m_;
};

// block (i, j) is Lambda(E_ij)
ChoiMatrix choi(const Channel& ch);
bool is_cp(const Channel& ch, double tol = kCpTol);

struct ContractivityResult {
  bool verdict = true;  // true means no witness found
  std::optional<HermitianOperator> witness;
  double max_excess = 0.0;  // max over tests of |L(X)|_1 - |X|_1
  int tested = 0;
};

// Random Gaussian Hermitians plus a deterministic sweep of E_ii - E_jj,
// rank-1 projectors and random projector differences.
ContractivityResult positivity_by_contractivity(const Channel& ch, int samples,
                                                std::uint64_t seed,
                                                double tol = kContractTol);

// a after b
Channel compose(const Channel& a, const Channel& b);
Channel inverse(const Channel& ch, double rcond = kRcond);
// descending singular values of the superoperator
RVector singular_values(const Channel& ch);

// (I_m (x) Lambda) as an explicit superoperator on dimension m*d.
Channel extend(const Channel& ch, Index ancilla_dim);
// (I_m (x) Lambda)(Y) applied blockwise, Y of dimension m*d.
CMatrix apply_extended(const Channel& ch, const CMatrix& y, Index ancilla_dim);
HermitianOperator apply_extended(const Channel& ch, const HermitianOperator& y,
                                 Index ancilla_dim);

double max_entry_distance(const Channel& a, const Channel& b);

// max_ij |tr L(E_ij) - delta_ij|
double tp_defect(const Channel& ch);
// max_ij |L(E_ji) - L(E_ij)^dag|_max
double hp_defect(const Channel& ch);

}  // namespace qdiv
