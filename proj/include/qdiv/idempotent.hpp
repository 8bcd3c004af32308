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

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <type_traits>
#include <vector>

#include "qdiv/channel.hpp"
#include "qdiv/divisibility.hpp"
#include "qdiv/errors.hpp"

namespace qdiv {

// (a, b, c, d) of a I + b E + c B + d D
using Coeffs4 = std::array<double, 4>;

struct IdempotentParams {
  int n = 1;
  int k = 1;
  double a = 0, b = 0, c = 0, d = 0;
  Coeffs4 coeffs() const { return {a, b, c, d}; }
  static IdempotentParams from(int n, int k, const Coeffs4& x) {
    return {n, k, x[0], x[1], x[2], x[3]};
  }
};

// On C^{nk} split into n blocks of size k:
//   I identity
//   E(X) = sum_i P_i X P_i
//   B(X) = sum_i tr(P_i X)/k P_i
//   D(X) = tr(X)/(nk) 1
struct IdempotentBasis {
  Channel identity, expectation, block_dephasing, dephasing;
};

// Memoized per (n, k).
const IdempotentBasis& build_basis(int n, int k);

Channel phi(const IdempotentParams& p);

struct EigenvalueMultiplicity {
  double value;
  long long multiplicity;
};

// Choi spectrum of phi(p) as four (value, multiplicity) pairs; some
// multiplicities are zero when n = 1 or k = 1.
std::array<EigenvalueMultiplicity, 4> choi_spectrum_closed_form(
    const IdempotentParams& p);

bool cp_condition(const IdempotentParams& p, double tol = 1e-12);
// Necessary conditions for 2-positivity: 2a + 2b + c/k + d/(nk) >= 0,
// c/k + d/(nk) >= 0, d >= 0.
bool two_positive_necessary(const IdempotentParams& p, double tol = 1e-12);
// (I_2 (x) phi)(|psi><psi|) for psi = |0 e_0> + |1 e_1>
HermitianOperator two_positive_test_matrix(const IdempotentParams& p);
// b * norm + a * l + c + d >= 0; needs a <= 0, b <= 0 and 1 <= l <= nk.
// norm defaults to k when l = 1 and is required otherwise.
bool l_positive_condition(const IdempotentParams& p, int l,
                          std::optional<double> norm_ce_sl = std::nullopt,
                          double tol = 1e-12);

namespace detail {
template <class T>
bool is_zero(const T& x) {
  if constexpr (std::is_floating_point_v<T>)
    return std::abs(x) <= 1e-14;
  else
    return x == T(0);
}
}  // namespace detail

// p(x) p(y) = p(z) with z_i = y_i X_i + x_i Y_{i-1}, X and Y partial sums.
template <class T>
std::vector<T> idempotent_product(const std::vector<T>& x,
                                  const std::vector<T>& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("coefficient vectors of unequal length");
  std::vector<T> z(x.size());
  T xs = T(0), ys = T(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = y[i] * (xs + x[i]) + x[i] * ys;
    xs += x[i];
    ys += y[i];
  }
  return z;
}

// y with p(y) p(x) = p(z)
template <class T>
std::vector<T> solve_left_divisor(const std::vector<T>& x,
                                  const std::vector<T>& z) {
  if (x.size() != z.size())
    throw DimensionMismatch("coefficient vectors of unequal length");
  std::vector<T> y(x.size());
  T xs = T(0), ys = T(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    xs += x[i];
    if (detail::is_zero(xs)) throw DegenerateDenominator(static_cast<int>(i) + 1);
    y[i] = (z[i] - x[i] * ys) / xs;
    ys += y[i];
  }
  return y;
}

// (alpha, beta, gamma, delta) with phi(alpha..delta) phi(s) = phi(t), by the
// four explicit fractions.
template <class T>
std::array<T, 4> divisor_coeffs(const std::array<T, 4>& s,
                                const std::array<T, 4>& t) {
  const T s1 = s[0], s2 = s1 + s[1], s3 = s2 + s[2], s4 = s3 + s[3];
  const T t2 = t[0] + t[1], t3 = t2 + t[2];
  if (detail::is_zero(s1)) throw DegenerateDenominator(1);
  if (detail::is_zero(s2)) throw DegenerateDenominator(2);
  if (detail::is_zero(s3)) throw DegenerateDenominator(3);
  if (detail::is_zero(s4)) throw DegenerateDenominator(4);
  return {t[0] / s1,
          (s[0] * t[1] - s[1] * t[0]) / (s1 * s2),
          (s2 * t[2] - s[2] * t2) / (s2 * s3),
          (s3 * t[3] - s[3] * t3) / (s3 * s4)};
}

// Least-squares coordinates of a channel in the {I, E, B, D} basis; the
// residual is the max-entry misfit.
struct BasisProjection {
  Coeffs4 coeffs;
  double residual;
};
BasisProjection project_onto_basis(const Channel& ch, int n, int k);

enum class Regime { CpDivisible, PNotCp, NotP, Undetermined };
std::string to_string(Regime r);

// CP by the closed-form Choi spectrum; with alpha, beta <= 0 the l = 1
// inequality decides P.
Regime classify_divisor(int n, int k, const Coeffs4& divisor);

using CoefficientFunction = std::function<Coeffs4(double)>;

DynamicalFamily make_family(const CoefficientFunction& coeffs, int n, int k,
                            TimeDomain domain, int check_points = 11,
                            const std::string& label = "idempotent");

struct PairClassification {
  double s, t;
  bool invertible;                  // all partial sums of the s-coefficients nonzero
  std::optional<Coeffs4> divisor;   // when invertible
  Regime regime;                    // closed form
  bool dense_cp;                    // Choi eigensolve of the divisor
  bool dense_p;                     // no contractivity witness found
  std::optional<bool> kernel_ok;    // only for singular Lambda_s
};

PairClassification classify_pair(const CoefficientFunction& coeffs, int n,
                                 int k, double s, double t, int samples = 200,
                                 std::uint64_t seed = 0);

// Divisor Choi eigenvalues and conditions for growing n at fixed k.
struct TruncationRow {
  int n;
  std::array<EigenvalueMultiplicity, 4> spectrum;
  bool cp;
  std::optional<bool> l1_positive;  // set when alpha, beta <= 0
};
std::vector<TruncationRow> truncation_report(const Coeffs4& s, const Coeffs4& t,
                                             int k, const std::vector<int>& ns);

}  // namespace qdiv
