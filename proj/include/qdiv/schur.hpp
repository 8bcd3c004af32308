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

#include <vector>

#include "qdiv/channel.hpp"
#include "qdiv/divisibility.hpp"

namespace qdiv {

struct SchurFamilyConfig {
  Index n_trunc = 8;
  TimeDomain domain{0.0, 0.5};
};

// 1 on the diagonal, t on the first off-diagonals
HermitianOperator toeplitz_a(Index n, double t);
// 1 + 2t cos(k pi/(n+1)), k = 1..n, ascending
RVector toeplitz_spectrum(Index n, double t);

// X -> A_t o X; t must lie in [0, 1/2]
Channel schur_channel(Index n, double t);
DynamicalFamily schur_family(const SchurFamilyConfig& cfg);

// tridiagonal block of ones (zero diagonal) of size n_block, padded with
// zeros to n_trunc
HermitianOperator schur_witness(Index n_block, Index n_trunc);
// E_00 (x) schur_witness, on the n_trunc^2 dimensional doubled space
HermitianOperator schur_cp_witness(Index n_block, Index n_trunc);

// 2 sum_k |cos(k pi/(n+1))|
double witness_slope(Index n);

struct GrowthRow {
  double t;
  double trace_norm;   // |Lambda_t(X)|_1 from an eigensolve
  double derivative;   // central difference of trace_norm
};

// Rows for the n-block witness at truncation n; h defaults to 1e-4 * 1/2.
std::vector<GrowthRow> witness_growth(Index n, const std::vector<double>& grid,
                                      double h = 5e-5);

}  // namespace qdiv
