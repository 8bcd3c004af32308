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

#include "qdiv/idempotent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qdiv {

namespace {

Channel make_expectation(int n, int k) {
  const Index d = static_cast<Index>(n) * k;
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (Index c = 0; c < d; ++c)
    for (Index r = 0; r < d; ++r)
      if (r / k == c / k) s(r + c * d, r + c * d) = 1.0;
  return Channel(std::move(s), d, d);
}

Channel make_block_dephasing(int n, int k) {
  const Index d = static_cast<Index>(n) * k;
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index r = 0; r < d; ++r)
      if (r / k == i / k) s(r + r * d, i + i * d) = 1.0 / k;
  return Channel(std::move(s), d, d);
}

Channel make_dephasing(int n, int k) {
  const Index d = static_cast<Index>(n) * k;
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index r = 0; r < d; ++r) s(r + r * d, i + i * d) = 1.0 / d;
  return Channel(std::move(s), d, d);
}

}  // namespace

const IdempotentBasis& build_basis(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const IdempotentBasis>>
      memo;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = memo[{n, k}];
  if (!slot)
    slot = std::make_unique<const IdempotentBasis>(IdempotentBasis{
        Channel::identity(static_cast<Index>(n) * k), make_expectation(n, k),
        make_block_dephasing(n, k), make_dephasing(n, k)});
  return *slot;
}

Channel phi(const IdempotentParams& p) {
  const IdempotentBasis& b = build_basis(p.n, p.k);
  return linear_combination(
      {p.a, p.b, p.c, p.d},
      {&b.identity, &b.expectation, &b.block_dephasing, &b.dephasing});
}

std::array<EigenvalueMultiplicity, 4> choi_spectrum_closed_form(
    const IdempotentParams& p) {
  const double n = p.n, k = p.k;
  const long long ni = p.n, ki = p.k;
  const double tail = p.d / (n * k);
  const double blocks = p.c / k + tail;
  return {{{n * k * p.a + k * p.b + blocks, 1},
           {k * p.b + blocks, ni - 1},
           {blocks, ni * (ki * ki - 1)},
           {tail, ni * ki * ki * (ni - 1)}}};
}

bool cp_condition(const IdempotentParams& p, double tol) {
  for (const auto& e : choi_spectrum_closed_form(p))
    if (e.multiplicity > 0 && e.value < -tol) return false;
  return true;
}

bool two_positive_necessary(const IdempotentParams& p, double tol) {
  const double n = p.n, k = p.k;
  const double blocks = p.c / k + p.d / (n * k);
  return 2 * p.a + 2 * p.b + blocks >= -tol && blocks >= -tol &&
         p.d >= -tol;
}

HermitianOperator two_positive_test_matrix(const IdempotentParams& p) {
  const Index d = static_cast<Index>(p.n) * p.k;
  if (d < 2) throw DimensionMismatch("needs nk >= 2");
  Channel ch = phi(p);
  CMatrix m(2 * d, 2 * d);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      CMatrix e = CMatrix::Zero(d, d);
      e(i, j) = 1.0;
      m.block(i * d, j * d, d, d) = ch.apply(e);
    }
  return hermitian_part(m);
}

bool l_positive_condition(const IdempotentParams& p, int l,
                          std::optional<double> norm_ce_sl, double tol) {
  if (p.a > 0 || p.b > 0)
    throw HypothesisViolated("l-positivity criterion needs a <= 0 and b <= 0");
  if (l < 1 || l > p.n * p.k)
    throw HypothesisViolated("l must lie in [1, nk]");
  if (!norm_ce_sl) {
    if (l != 1)
      throw HypothesisViolated("|C_E|_S(l) must be supplied for l >= 2");
    norm_ce_sl = static_cast<double>(p.k);
  }
  return p.b * *norm_ce_sl + p.a * l + p.c + p.d >= -tol;
}

BasisProjection project_onto_basis(const Channel& ch, int n, int k) {
  const IdempotentBasis& b = build_basis(n, k);
  const Index d = static_cast<Index>(n) * k;
  if (ch.dim_in() != d || ch.dim_out() != d)
    throw DimensionMismatch("channel dimension differs from nk");
  const Index len = d * d * d * d;
  CMatrix a(len, 4);
  int col = 0;
  for (const Channel* c :
       {&b.identity, &b.expectation, &b.block_dephasing, &b.dephasing})
    a.col(col++) = Eigen::Map<const CVector>(c->superoperator().data(), len);
  CVector rhs = Eigen::Map<const CVector>(ch.superoperator().data(), len);
  CVector x = a.colPivHouseholderQr().solve(rhs);
  BasisProjection out{{x(0).real(), x(1).real(), x(2).real(), x(3).real()},
                      max_abs(a * x - rhs)};
  return out;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::CpDivisible:
      return "CP_DIVISIBLE";
    case Regime::PNotCp:
      return "P_NOT_CP";
    case Regime::NotP:
      return "NOT_P";
    case Regime::Undetermined:
      return "UNDETERMINED";
  }
  return "UNKNOWN";
}

Regime classify_divisor(int n, int k, const Coeffs4& x) {
  IdempotentParams p = IdempotentParams::from(n, k, x);
  if (cp_condition(p)) return Regime::CpDivisible;
  if (x[0] <= 0 && x[1] <= 0)
    return l_positive_condition(p, 1) ? Regime::PNotCp : Regime::NotP;
  return Regime::Undetermined;
}

DynamicalFamily make_family(const CoefficientFunction& coeffs, int n, int k,
                            TimeDomain domain, int check_points,
                            const std::string& label) {
  std::vector<double> ts =
      check_points < 2 ? std::vector<double>{domain.t_min}
                       : linspace(domain.t_min, domain.t_max, check_points);
  for (double t : ts) {
    Coeffs4 x = coeffs(t);
    if (std::abs(x[0] + x[1] + x[2] + x[3] - 1.0) > 1e-9)
      throw InvalidFamily(t, "coefficients do not sum to 1");
    if (!cp_condition(IdempotentParams::from(n, k, x)))
      throw InvalidFamily(t, "coefficients violate the complete positivity "
                             "conditions");
  }
  return DynamicalFamily(
      label, static_cast<Index>(n) * k, domain,
      [coeffs, n, k](double t) {
        return phi(IdempotentParams::from(n, k, coeffs(t)));
      },
      check_points);
}

PairClassification classify_pair(const CoefficientFunction& coeffs, int n,
                                 int k, double s, double t, int samples,
                                 std::uint64_t seed) {
  const Coeffs4 xs = coeffs(s), xt = coeffs(t);
  PairClassification out{s, t, true, std::nullopt, Regime::Undetermined,
                         false, false, std::nullopt};
  try {
    Coeffs4 div = divisor_coeffs(xs, xt);
    out.divisor = div;
    out.regime = classify_divisor(n, k, div);
    Channel map = phi(IdempotentParams::from(n, k, div));
    out.dense_cp = is_cp(map);
    out.dense_p = positivity_by_contractivity(map, samples, seed).verdict;
  } catch (const DegenerateDenominator&) {
    out.invertible = false;
    Channel ls = phi(IdempotentParams::from(n, k, xs));
    Channel lt = phi(IdempotentParams::from(n, k, xt));
    bool ok = true;
    for (const CVector& v : numerical_kernel(ls))
      if ((lt.superoperator() * v).norm() > kKernelTol) ok = false;
    out.kernel_ok = ok;
  }
  return out;
}

std::vector<TruncationRow> truncation_report(const Coeffs4& s, const Coeffs4& t,
                                             int k,
                                             const std::vector<int>& ns) {
  Coeffs4 div = divisor_coeffs(s, t);
  std::vector<TruncationRow> rows;
  for (int n : ns) {
    IdempotentParams p = IdempotentParams::from(n, k, div);
    TruncationRow r{n, choi_spectrum_closed_form(p), cp_condition(p),
                    std::nullopt};
    if (div[0] <= 0 && div[1] <= 0) r.l1_positive = l_positive_condition(p, 1);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qdiv
