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

#include "qdiv/schur.hpp"

#include <cmath>
#include <numbers>

#include "qdiv/errors.hpp"

namespace qdiv {

HermitianOperator toeplitz_a(Index n, double t) {
  CMatrix a = CMatrix::Identity(n, n);
  for (Index j = 0; j + 1 < n; ++j) a(j, j + 1) = a(j + 1, j) = t;
  return HermitianOperator(a);
}

RVector toeplitz_spectrum(Index n, double t) {
  RVector ev(n);
  // k = n..1 gives ascending order for t >= 0
  for (Index i = 0; i < n; ++i)
    ev(i) = 1.0 + 2.0 * t * std::cos((n - i) * std::numbers::pi / (n + 1));
  if (t < 0) ev.reverseInPlace();
  return ev;
}

Channel schur_channel(Index n, double t) {
  if (t < 0.0 || t > 0.5) throw OutsideValidityWindow(t);
  CMatrix a = toeplitz_a(n, t).matrix();
  CMatrix s = CMatrix::Zero(n * n, n * n);
  for (Index c = 0; c < n; ++c)
    for (Index r = 0; r < n; ++r) s(r + c * n, r + c * n) = a(r, c);
  return Channel(std::move(s), n, n);
}

DynamicalFamily schur_family(const SchurFamilyConfig& cfg) {
  if (cfg.n_trunc < 2) throw std::invalid_argument("n_trunc must be >= 2");
  if (cfg.domain.t_min < 0.0) throw OutsideValidityWindow(cfg.domain.t_min);
  if (cfg.domain.t_max > 0.5) throw OutsideValidityWindow(cfg.domain.t_max);
  const Index n = cfg.n_trunc;
  return DynamicalFamily("schur", n, cfg.domain,
                         [n](double t) { return schur_channel(n, t); });
}

HermitianOperator schur_witness(Index n_block, Index n_trunc) {
  if (n_block > n_trunc)
    throw DimensionMismatch("witness block larger than the truncation");
  CMatrix x = CMatrix::Zero(n_trunc, n_trunc);
  for (Index j = 0; j + 1 < n_block; ++j) x(j, j + 1) = x(j + 1, j) = 1.0;
  return HermitianOperator(x);
}

HermitianOperator schur_cp_witness(Index n_block, Index n_trunc) {
  CMatrix e00 = CMatrix::Zero(n_trunc, n_trunc);
  e00(0, 0) = 1.0;
  return hermitian_part(kron(e00, schur_witness(n_block, n_trunc).matrix()));
}

double witness_slope(Index n) {
  double s = 0.0;
  for (Index k = 1; k <= n; ++k)
    s += std::abs(std::cos(k * std::numbers::pi / (n + 1)));
  return 2.0 * s;
}

std::vector<GrowthRow> witness_growth(Index n, const std::vector<double>& grid,
                                      double h) {
  HermitianOperator x = schur_witness(n, n);
  auto norm_at = [&](double t) {
    return trace_norm(apply(schur_channel(n, t), x));
  };
  std::vector<GrowthRow> rows;
  for (double t : grid) {
    if (t - h < 0.0 || t + h > 0.5) throw DomainExceeded(t, h, 0.5 - h);
    rows.push_back({t, norm_at(t), (norm_at(t + h) - norm_at(t - h)) / (2 * h)});
  }
  return rows;
}

}  // namespace qdiv
