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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdiv/divisibility.hpp"
#include "qdiv/operator.hpp"
#include "qdiv/random.hpp"

namespace qdiv {

inline constexpr double kGaussTol = 1e-9;
inline constexpr double kDetTol = 1e-12;

// Phase-space vectors are ordered (q_1..q_m, p_1..p_m).
// J = [[0, I], [-I, 0]]
RMatrix symplectic_form(Index m);
// |R J R^T - J|_max
double symplectic_residual(const RMatrix& r);
bool is_symplectic(const RMatrix& r, double tol = kGaussTol);
// [[X, Y], [-Y, X]]; symplectic iff X + iY is unitary
RMatrix from_unitary_blocks(const RMatrix& x, const RMatrix& y);
// passive rotation * squeezer * passive rotation
RMatrix random_symplectic(Index m, Rng& rng, double max_log_squeeze = 1.0);

// lambda_min(Y - i(J - X J X^T))
double channel_validity_margin(const RMatrix& x, const RMatrix& y);
// lambda_min(2S + iJ)
double state_validity_margin(const RMatrix& s);

// S -> X S X^T + Y/2
class GaussianPair {
 public:
  GaussianPair(RMatrix x, RMatrix y, double tol = kGaussTol);
  Index modes() const { return x_.rows() / 2; }
  const RMatrix& X() const { return x_; }
  const RMatrix& Y() const { return y_; }

 private:
  RMatrix x_, y_;
};

class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(RMatrix s, double tol = kGaussTol);
  static CovarianceMatrix vacuum(Index m);
  Index modes() const { return s_.rows() / 2; }
  const RMatrix& S() const { return s_; }

 private:
  RMatrix s_;
};

CovarianceMatrix apply_to_covariance(const GaussianPair& ch,
                                     const CovarianceMatrix& s);
// after o before
GaussianPair compose(const GaussianPair& after, const GaussianPair& before);

// Permutation P with (P v) = (q_sys, p_sys, q_env, p_env) for the first
// m_keep modes as system.
RMatrix system_first_permutation(Index total_modes, Index m_keep);

// L = R1 T R2 reordered system first; X = L11, Y = L12 L12^T.
// m_keep = M is allowed and gives Y = 0.
GaussianPair dilation_channel(const RMatrix& r1, const RMatrix& t,
                              const RMatrix& r2, Index m_keep);

using GaussianGenerator = std::function<GaussianPair(double)>;

class GaussianFamily {
 public:
  GaussianFamily(std::string label, Index m, TimeDomain domain,
                 GaussianGenerator generator, int check_points = 11);
  GaussianPair at(double t) const;
  const std::string& label() const { return label_; }
  Index modes() const { return m_; }
  const TimeDomain& domain() const { return domain_; }

 private:
  std::string label_;
  Index m_;
  TimeDomain domain_;
  GaussianGenerator gen_;
};

struct DetScanRow {
  double t;
  double det;
  double ddet;
  bool violation;
};

struct DetScanReport {
  std::vector<DetScanRow> rows;
  bool violation = false;
  std::optional<double> first_violation_t;
};

double det_derivative(const GaussianFamily& fam, double t, double h);
DetScanReport det_criterion_scan(const GaussianFamily& fam,
                                 const std::vector<double>& grid, double h,
                                 double tau_slope = kSlopeTol);

// phi(0,0) det X_t
double weyl_trace_norm(const GaussianFamily& fam, double t, double phi0);

struct AncillaTerm {
  double phi_at_origin;
  double trace_b;
};
// det X_t * sum_j phi_j(0,0) tr B_j
double weyl_trace_norm(const GaussianFamily& fam, double t,
                       const std::vector<AncillaTerm>& terms);

struct DilationInputs {
  RMatrix r1, t, r2;
  Index m_keep;
};

// Beam-splitter example on two modes, T = diag(1, t, 1, 1/t). antisymmetric_y1
// flips the sign of one Y1 entry, which makes R1 non-symplectic.
DilationInputs example_4_1_inputs(double t, bool antisymmetric_y1 = false);
GaussianFamily example_4_1_family(TimeDomain domain = {0.1, 10.0});
// Three-mode example, T = diag(1, t, t^2, 1, 1/t, 1/t^2), keeping two modes.
DilationInputs example_4_2_inputs(double t);
// Throws NotSymplectic naming the first failing factor.
GaussianFamily example_4_2_family(TimeDomain domain = {0.1, 2.0});
// 2 / (sqrt 3 (sqrt 2 + sqrt 3)), the onset claimed for the three-mode example
double example_4_2_claimed_onset();

}  // namespace qdiv
