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
#include <random>
#include <vector>

#include "qdiv/operator.hpp"

namespace qdiv {

using Rng = std::mt19937_64;

CMatrix random_ginibre(Index rows, Index cols, Rng& rng);
// Gaussian entries, symmetrized.
HermitianOperator random_hermitian(Index d, Rng& rng);
// Haar-distributed via QR of a Ginibre matrix.
CMatrix random_unitary(Index d, Rng& rng);
CVector random_pure_state(Index d, Rng& rng);
// psi psi^dag - phi phi^dag for independent Haar states
HermitianOperator random_projector_difference(Index d, Rng& rng);
// Kraus list of a random CPTP map: blocks of a Haar isometry d -> count*d.
std::vector<CMatrix> random_kraus(Index d, int count, Rng& rng);

}  // namespace qdiv
