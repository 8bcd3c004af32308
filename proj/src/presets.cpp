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

#include "qdiv/presets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdiv/errors.hpp"
#include "qdiv/random.hpp"
#include "qdiv/schur.hpp"

namespace qdiv {

const std::vector<PresetInfo>& list_presets() {
  static const std::vector<PresetInfo> presets{
      {"unitary", PresetKind::Channel,
       "Ad exp(-iHt) for a seeded random H; dimension --n (default 3)"},
      {"depolarizing", PresetKind::Channel,
       "e^-t id + (1 - e^-t) D semigroup; dimension --n (default 2)"},
      {"generic-noncp", PresetKind::Channel,
       "three-Kraus family with eta_t = t on d = 4"},
      {"schur", PresetKind::Channel,
       "A_t o X with tridiagonal Toeplitz A_t; truncation --n (default 8)"},
      {"kernel-collapse", PresetKind::Channel,
       "(1 - min(t,1)) id + min(t,1) D on [0, 2]"},
      {"kernel-resurrect", PresetKind::Channel,
       "|1 - t| id + (1 - |1 - t|) D on [0, 2]"},
      {"idempotent-cp", PresetKind::Idempotent,
       "partial sums e^-t, e^-t/2, e^-t/5 (CP-divisible)"},
      {"idempotent-p-not-cp", PresetKind::Idempotent,
       "partial sums max(0, 1-2t), 1-1.3t, 1"},
      {"idempotent-not-p", PresetKind::Idempotent,
       "partial sums max(0, 1-1.25t), 1-1.3t, 1"},
      {"example-4.1", PresetKind::Gaussian,
       "two-mode dilation with T = diag(1,t,1,1/t), R1 sign-corrected"},
      {"example-4.2", PresetKind::Gaussian,
       "three-mode dilation; R1 fails symplectic validation"},
      {"gaussian-loss", PresetKind::Gaussian,
       "single-mode pure loss X = e^-t/2 I, Y = (1 - e^-t) I"},
  };
  return presets;
}

const PresetInfo& find_preset(const std::string& name) {
  for (const PresetInfo& p : list_presets())
    if (p.name == name) return p;
  throw ConfigError("preset", "unknown preset '" + name + "'");
}

namespace {

Coeffs4 from_partial_sums(double l1, double l2, double l3) {
  return {l1, l2 - l1, l3 - l2, 1.0 - l3};
}

Channel dephasing(Index d) { return build_basis(1, static_cast<int>(d)).dephasing; }

DynamicalFamily mix_with_dephasing(const std::string& label, Index d,
                                   std::function<double(double)> w) {
  Channel id = Channel::identity(d), dep = dephasing(d);
  return DynamicalFamily(label, d, {0.0, 2.0}, [=](double t) {
    double x = w(t);
    return linear_combination({1.0 - x, x}, {&id, &dep});
  });
}

}  // namespace

DynamicalFamily kernel_collapse_family(Index d) {
  return mix_with_dephasing("kernel-collapse", d,
                            [](double t) { return std::min(t, 1.0); });
}

DynamicalFamily kernel_resurrect_family(Index d) {
  return mix_with_dephasing("kernel-resurrect", d,
                            [](double t) { return 1.0 - std::abs(1.0 - t); });
}

Channel generic_noncp_channel(Index d, double t) {
  if (d < 2) throw DimensionMismatch("generic-noncp needs d >= 2");
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix e1 = CMatrix::Identity(d, d), e2 = e1, e3 = e1;
  e1.topLeftCorner(2, 2) << 0, 1, 1, 0;
  e2.topLeftCorner(2, 2) << r, r, r, r;
  // -1 where i + j is even
  e3.topLeftCorner(2, 2) << -r, r, r, -r;
  const double eta = t, kappa = 1.0 - t;
  return Channel::from_kraus({std::sqrt(std::max(eta, 0.0)) * e1,
                              std::sqrt(std::max(kappa, 0.0) / 2) * e2,
                              std::sqrt(std::max(kappa, 0.0) / 2) * e3});
}

CoefficientFunction idempotent_coefficients(const std::string& name) {
  if (name == "idempotent-cp")
    return [](double t) {
      return from_partial_sums(std::exp(-t), std::exp(-0.5 * t),
                               std::exp(-0.2 * t));
    };
  if (name == "idempotent-p-not-cp")
    return [](double t) {
      return from_partial_sums(std::max(0.0, 1.0 - 2.0 * t), 1.0 - 1.3 * t,
                               1.0);
    };
  if (name == "idempotent-not-p")
    return [](double t) {
      return from_partial_sums(std::max(0.0, 1.0 - 1.25 * t), 1.0 - 1.3 * t,
                               1.0);
    };
  throw ConfigError("preset", "'" + name + "' is not an idempotent preset");
}

TimeDomain idempotent_domain(const std::string& name) {
  idempotent_coefficients(name);
  return {0.0, 1.0};
}

DynamicalFamily make_channel_family(const std::string& name,
                                    const PresetOptions& opt) {
  const PresetInfo& info = find_preset(name);
  if (info.kind == PresetKind::Gaussian)
    throw ConfigError("preset", "'" + name + "' is a Gaussian preset");
  if (name == "unitary") {
    const Index d = opt.n > 0 ? opt.n : 3;
    Rng rng(opt.seed);
    SpectralDecomposition h = eigh(random_hermitian(d, rng));
    return DynamicalFamily("unitary", d, {0.0, 1.0}, [h](double t) {
      CVector phases = (h.eigenvalues * -t).unaryExpr(
          [](double x) { return std::polar(1.0, x); });
      return Channel::unitary(h.eigenvectors * phases.asDiagonal() *
                              h.eigenvectors.adjoint());
    });
  }
  if (name == "depolarizing") {
    const Index d = opt.n > 0 ? opt.n : 2;
    return mix_with_dephasing("depolarizing", d,
                              [](double t) { return 1.0 - std::exp(-t); });
  }
  if (name == "generic-noncp") {
    const Index d = opt.n > 0 ? opt.n : 4;
    return DynamicalFamily("generic-noncp", d, {0.0, 1.0}, [d](double t) {
      return generic_noncp_channel(d, t);
    });
  }
  if (name == "schur") {
    SchurFamilyConfig cfg;
    cfg.n_trunc = opt.n > 0 ? opt.n : 8;
    return schur_family(cfg);
  }
  if (name == "kernel-collapse") return kernel_collapse_family(opt.n > 0 ? opt.n : 2);
  if (name == "kernel-resurrect")
    return kernel_resurrect_family(opt.n > 0 ? opt.n : 2);
  const int n = opt.n > 0 ? opt.n : 2, k = opt.k > 0 ? opt.k : 2;
  return make_family(idempotent_coefficients(name), n, k,
                     idempotent_domain(name), 11, name);
}

GaussianFamily make_gaussian_family(const std::string& name) {
  if (name == "example-4.1") return example_4_1_family();
  if (name == "example-4.2") return example_4_2_family();
  if (name == "gaussian-loss")
    return GaussianFamily("gaussian-loss", 1, {0.0, 3.0}, [](double t) {
      return GaussianPair(std::exp(-0.5 * t) * RMatrix::Identity(2, 2),
                          (1.0 - std::exp(-t)) * RMatrix::Identity(2, 2));
    });
  find_preset(name);
  throw ConfigError("preset", "'" + name + "' is not a Gaussian preset");
}

HermitianOperator bell_difference_witness(Index d) {
  if (d < 2) throw DimensionMismatch("needs d >= 2");
  CVector psi = CVector::Zero(d * d), phi = CVector::Zero(d * d);
  psi(0) = psi(d + 1) = 1.0;
  phi(1) = phi(d) = 1.0;
  return hermitian_part(psi * psi.adjoint() - phi * phi.adjoint());
}

std::vector<HermitianOperator> preset_p_witnesses(const std::string& name,
                                                  const DynamicalFamily& fam,
                                                  std::uint64_t seed) {
  if (name == "schur") return {schur_witness(fam.dim(), fam.dim())};
  return default_witnesses(fam.dim(), seed);
}

std::vector<HermitianOperator> preset_cp_witnesses(const std::string& name,
                                                   const DynamicalFamily& fam,
                                                   std::uint64_t seed) {
  const Index d = fam.dim();
  if (name == "schur") return {schur_cp_witness(d, d)};
  if (name == "generic-noncp") return {bell_difference_witness(d)};
  std::vector<HermitianOperator> w{bell_difference_witness(d)};
  Rng rng(seed);
  for (int s = 0; s < 20; ++s) w.push_back(random_projector_difference(d * d, rng));
  for (int s = 0; s < 20; ++s) w.push_back(random_hermitian(d * d, rng));
  return w;
}

}  // namespace qdiv
