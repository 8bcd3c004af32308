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
#include <string>
#include <vector>

#include "qdiv/divisibility.hpp"
#include "qdiv/gaussian.hpp"
#include "qdiv/idempotent.hpp"

namespace qdiv {

enum class PresetKind { Channel, Idempotent, Gaussian };

struct PresetInfo {
  std::string name;
  PresetKind kind;
  std::string description;
};

const std::vector<PresetInfo>& list_presets();
const PresetInfo& find_preset(const std::string& name);

struct PresetOptions {
  int n = 0;  // 0 selects the preset default
  int k = 0;
  std::uint64_t seed = 1;
};

// Channel families: unitary, depolarizing, generic-noncp, schur,
// kernel-collapse, kernel-resurrect and the idempotent-* presets.
DynamicalFamily make_channel_family(const std::string& name,
                                    const PresetOptions& opt);

// Idempotent presets on n = k = 2 by default. Coefficients are built from
// the partial sums lam1 <= lam2 <= lam3 <= 1 of (a, b, c, d).
CoefficientFunction idempotent_coefficients(const std::string& name);
TimeDomain idempotent_domain(const std::string& name);

// example-4.1, example-4.2 (throws NotSymplectic), gaussian-loss
GaussianFamily make_gaussian_family(const std::string& name);

// Witnesses used by the CLI for a preset; a fixed analytic witness for
// schur and generic-noncp, the default library otherwise.
std::vector<HermitianOperator> preset_p_witnesses(const std::string& name,
                                                  const DynamicalFamily& fam,
                                                  std::uint64_t seed);
std::vector<HermitianOperator> preset_cp_witnesses(const std::string& name,
                                                   const DynamicalFamily& fam,
                                                   std::uint64_t seed);

// psi psi^dag - phi phi^dag, psi = |00> + |11>, phi = |01> + |10>, on d^2
HermitianOperator bell_difference_witness(Index d);

// (1 - min(t,1)) id + min(t,1) D on [0, 2]
DynamicalFamily kernel_collapse_family(Index d);
// |1 - t| id + (1 - |1 - t|) D on [0, 2]
DynamicalFamily kernel_resurrect_family(Index d);

// eta E1 X E1^dag + kappa/2 (E2 X E2^dag + E3 X E3^dag), eta = t,
// kappa = 1 - t; E1 swaps |0>, |1>, E2 and E3 are Hadamard-like on that pair
// and all three act as the identity on the rest. Needs d >= 2.
Channel generic_noncp_channel(Index d, double t);

}  // namespace qdiv
