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

#include "qdiv/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "qdiv/errors.hpp"

namespace qdiv {

namespace {

void require_phase_space(const RMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw DimensionMismatch(std::string(what) +
                            " must be square of even dimension");
}

double min_eig_hermitian(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double scale_of(const RMatrix& x, const RMatrix& y) {
  double sx = x.cwiseAbs().maxCoeff();
  return std::max({1.0, sx * sx, y.cwiseAbs().maxCoeff()});
}

}  // namespace

RMatrix symplectic_form(Index m) {
  RMatrix j = RMatrix::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = RMatrix::Identity(m, m);
  j.bottomLeftCorner(m, m) = -RMatrix::Identity(m, m);
  return j;
}

double symplectic_residual(const RMatrix& r) {
  require_phase_space(r, "symplectic candidate");
  RMatrix j = symplectic_form(r.rows() / 2);
  return (r * j * r.transpose() - j).cwiseAbs().maxCoeff();
}

bool is_symplectic(const RMatrix& r, double tol) {
  return symplectic_residual(r) <= tol;
}

RMatrix from_unitary_blocks(const RMatrix& x, const RMatrix& y) {
  const Index m = x.rows();
  RMatrix r(2 * m, 2 * m);
  r << x, y, -y, x;
  return r;
}

RMatrix random_symplectic(Index m, Rng& rng, double max_log_squeeze) {
  auto passive = [&] {
    CMatrix u = random_unitary(m, rng);
    return from_unitary_blocks(u.real(), u.imag());
  };
  std::uniform_real_distribution<double> ls(-max_log_squeeze, max_log_squeeze);
  RVector diag(2 * m);
  for (Index i = 0; i < m; ++i) {
    double s = std::exp(ls(rng));
    diag(i) = s;
    diag(m + i) = 1.0 / s;
  }
  return passive() * diag.asDiagonal() * passive();
}

double channel_validity_margin(const RMatrix& x, const RMatrix& y) {
  require_phase_space(x, "X");
  if (y.rows() != x.rows() || y.cols() != x.cols())
    throw DimensionMismatch("X and Y differ in shape");
  RMatrix j = symplectic_form(x.rows() / 2);
  RMatrix anti = j - x * j * x.transpose();
  CMatrix h = y.cast<Complex>() - Complex(0, 1) * anti.cast<Complex>();
  return min_eig_hermitian((h + h.adjoint()) * 0.5);
}

double state_validity_margin(const RMatrix& s) {
  require_phase_space(s, "covariance matrix");
  RMatrix j = symplectic_form(s.rows() / 2);
  CMatrix h = 2.0 * s.cast<Complex>() + Complex(0, 1) * j.cast<Complex>();
  return min_eig_hermitian((h + h.adjoint()) * 0.5);
}

GaussianPair::GaussianPair(RMatrix x, RMatrix y, double tol)
    : x_(std::move(x)), y_(std::move(y)) {
  require_phase_space(x_, "X");
  if (y_.rows() != x_.rows() || y_.cols() != x_.cols())
    throw DimensionMismatch("X and Y differ in shape");
  if ((y_ - y_.transpose()).cwiseAbs().maxCoeff() > tol * scale_of(x_, y_))
    throw std::invalid_argument("Y must be symmetric");
  y_ = (y_ + y_.transpose()) * 0.5;
  double margin = channel_validity_margin(x_, y_);
  if (margin < -tol * scale_of(x_, y_)) throw InvalidChannel(margin);
}

CovarianceMatrix::CovarianceMatrix(RMatrix s, double tol) : s_(std::move(s)) {
  require_phase_space(s_, "covariance matrix");
  if ((s_ - s_.transpose()).cwiseAbs().maxCoeff() > tol)
    throw InvalidState(-1.0);
  s_ = (s_ + s_.transpose()) * 0.5;
  double margin = state_validity_margin(s_);
  if (margin < -tol * std::max(1.0, s_.cwiseAbs().maxCoeff()))
    throw InvalidState(margin);
}

CovarianceMatrix CovarianceMatrix::vacuum(Index m) {
  return CovarianceMatrix(0.5 * RMatrix::Identity(2 * m, 2 * m));
}

CovarianceMatrix apply_to_covariance(const GaussianPair& ch,
                                     const CovarianceMatrix& s) {
  if (ch.modes() != s.modes())
    throw DimensionMismatch("channel and state have different mode counts");
  RMatrix out = ch.X() * s.S() * ch.X().transpose() + 0.5 * ch.Y();
  return CovarianceMatrix(std::move(out), 1e-8);
}

GaussianPair compose(const GaussianPair& after, const GaussianPair& before) {
  if (after.modes() != before.modes())
    throw DimensionMismatch("composition of channels on different modes");
  return GaussianPair(after.X() * before.X(),
                      after.X() * before.Y() * after.X().transpose() +
                          after.Y());
}

RMatrix system_first_permutation(Index total, Index m_keep) {
  if (m_keep < 1 || m_keep > total)
    throw DimensionMismatch("kept modes must lie in [1, M]");
  std::vector<Index> idx;
  for (Index i = 0; i < m_keep; ++i) idx.push_back(i);
  for (Index i = 0; i < m_keep; ++i) idx.push_back(total + i);
  for (Index i = m_keep; i < total; ++i) idx.push_back(i);
  for (Index i = m_keep; i < total; ++i) idx.push_back(total + i);
  RMatrix p = RMatrix::Zero(2 * total, 2 * total);
  for (Index row = 0; row < 2 * total; ++row) p(row, idx[row]) = 1.0;
  return p;
}

GaussianPair dilation_channel(const RMatrix& r1, const RMatrix& t,
                              const RMatrix& r2, Index m_keep) {
  require_phase_space(r1, "R1");
  require_phase_space(t, "T");
  require_phase_space(r2, "R2");
  if (t.rows() != r1.rows() || r2.rows() != r1.rows())
    throw DimensionMismatch("dilation factors differ in size");
  const Index total = r1.rows() / 2;

  double res = symplectic_residual(r1);
  if (res > kGaussTol) throw NotSymplectic("R1", res);
  RMatrix off_diag = t;
  off_diag.diagonal().setZero();
  res = std::max(symplectic_residual(t), off_diag.cwiseAbs().maxCoeff());
  if (res > kGaussTol * std::max(1.0, t.cwiseAbs().maxCoeff()))
    throw NotSymplectic("T", res);
  res = symplectic_residual(r2);
  if (res > kGaussTol) throw NotSymplectic("R2", res);

  RMatrix p = system_first_permutation(total, m_keep);
  RMatrix l = p * (r1 * t * r2) * p.transpose();
  const Index s = 2 * m_keep, e = 2 * (total - m_keep);
  RMatrix x = l.topLeftCorner(s, s);
  RMatrix l12 = l.topRightCorner(s, e);
  RMatrix y = l12 * l12.transpose();
  double margin = channel_validity_margin(x, y);
  if (margin < -kGaussTol * scale_of(x, y)) throw InvalidDilation(margin);
  return GaussianPair(std::move(x), std::move(y));
}

GaussianFamily::GaussianFamily(std::string label, Index m, TimeDomain domain,
                               GaussianGenerator generator, int check_points)
    : label_(std::move(label)),
      m_(m),
      domain_(domain),
      gen_(std::move(generator)) {
  std::vector<double> ts =
      check_points < 2 ? std::vector<double>{domain_.t_min}
                       : linspace(domain_.t_min, domain_.t_max, check_points);
  for (double t : ts) {
    GaussianPair g = gen_(t);
    if (g.modes() != m_)
      throw InvalidFamily(t, "generator returned the wrong mode count");
  }
}

GaussianPair GaussianFamily::at(double t) const {
  if (!domain_.contains(t))
    throw DomainExceeded(t, domain_.t_min, domain_.t_max);
  return gen_(t);
}

namespace {

double checked_det(const GaussianFamily& fam, double t) {
  double det = fam.at(t).X().determinant();
  if (std::abs(det) <= kDetTol) throw SingularX(t, det);
  return det;
}

}  // namespace

double det_derivative(const GaussianFamily& fam, double t, double h) {
  return (checked_det(fam, t + h) - checked_det(fam, t - h)) / (2 * h);
}

DetScanReport det_criterion_scan(const GaussianFamily& fam,
                                 const std::vector<double>& grid, double h,
                                 double tau_slope) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be > 0");
  DetScanReport rep;
  for (double t : grid) {
    const TimeDomain& dom = fam.domain();
    for (double u : {t - h, t + h})
      if (!dom.contains(u)) throw DomainExceeded(u, dom.t_min, dom.t_max);
    DetScanRow row{t, checked_det(fam, t), det_derivative(fam, t, h), false};
    row.violation = row.ddet > tau_slope;
    if (row.violation && !rep.violation) {
      rep.violation = true;
      rep.first_violation_t = t;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

double weyl_trace_norm(const GaussianFamily& fam, double t, double phi0) {
  if (!(phi0 > 0)) throw std::invalid_argument("phi(0,0) must be positive");
  return phi0 * fam.at(t).X().determinant();
}

double weyl_trace_norm(const GaussianFamily& fam, double t,
                       const std::vector<AncillaTerm>& terms) {
  double w = 0.0;
  for (const AncillaTerm& a : terms) w += a.phi_at_origin * a.trace_b;
  if (w < 0) throw std::invalid_argument("ancilla weight must be nonnegative");
  return w * fam.at(t).X().determinant();
}

DilationInputs example_4_1_inputs(double t, bool antisymmetric_y1) {
  const double r = 1.0 / std::sqrt(2.0);
  RMatrix x1 = r * RMatrix::Identity(2, 2);
  RMatrix y1(2, 2);
  y1 << 0, r, (antisymmetric_y1 ? -r : r), 0;
  RMatrix x2(2, 2), y2(2, 2);
  x2 << 0.5, 0.5, 0.5, 0.5;
  y2 << 0.5, -0.5, -0.5, 0.5;
  RVector tdiag(4);
  tdiag << 1.0, t, 1.0, 1.0 / t;
  return {from_unitary_blocks(x1, y1), tdiag.asDiagonal().toDenseMatrix(),
          from_unitary_blocks(x2, y2), 1};
}

GaussianFamily example_4_1_family(TimeDomain domain) {
  if (domain.t_min <= 0) throw InvalidFamily(domain.t_min, "needs t > 0");
  return GaussianFamily("example-4.1", 1, domain, [](double t) {
    DilationInputs in = example_4_1_inputs(t);
    return dilation_channel(in.r1, in.t, in.r2, in.m_keep);
  });
}

DilationInputs example_4_2_inputs(double t) {
  const double s3 = std::sqrt(3.0), r2 = 1.0 / std::sqrt(2.0);
  RMatrix x1(3, 3), y1(3, 3), x2(3, 3), y2(3, 3);
  x1 << 1, 1, 1, 1, -s3 / 2, -s3 / 2, 1, -s3 / 2, -s3 / 2;
  x1 /= s3;
  y1 << 0, 0, 0, 0, 0.5, -0.5, 0, -0.5, 0.5;
  y1 /= s3;
  x2 << r2, r2, 0, r2, r2, 0, 0, 0, 1;
  y2 << 1, -1, 0, -1, 1, 0, 0, 0, 0;
  y2 *= r2;
  RVector tdiag(6);
  tdiag << 1.0, t, t * t, 1.0, 1.0 / t, 1.0 / (t * t);
  return {from_unitary_blocks(x1, y1), tdiag.asDiagonal().toDenseMatrix(),
          from_unitary_blocks(x2, y2), 2};
}

GaussianFamily example_4_2_family(TimeDomain domain) {
  if (domain.t_min <= 0) throw InvalidFamily(domain.t_min, "needs t > 0");
  return GaussianFamily("example-4.2", 2, domain, [](double t) {
    DilationInputs in = example_4_2_inputs(t);
    return dilation_channel(in.r1, in.t, in.r2, in.m_keep);
  });
}

double example_4_2_claimed_onset() {
  return 2.0 / (std::sqrt(3.0) * (std::sqrt(2.0) + std::sqrt(3.0)));
}

}  // namespace qdiv
