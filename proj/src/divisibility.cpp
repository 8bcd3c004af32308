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

#include "qdiv/divisibility.hpp"

#include <cmath>
#include <stdexcept>

#include "qdiv/errors.hpp"
#include "qdiv/parallel.hpp"
#include "qdiv/random.hpp"

namespace qdiv {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kFamilyTpTol = 1e-9;

const char* kScanNote =
    "non-violation verdicts are evidence on the sampled grid and witnesses, "
    "not a proof of divisibility";

}  // namespace

bool TimeDomain::contains(double t) const {
  double slack = kDomainSlack * std::max(1.0, std::abs(t_max - t_min));
  return t >= t_min - slack && t <= t_max + slack;
}

std::vector<double> linspace(double a, double b, int points) {
  if (points < 1) throw std::invalid_argument("linspace needs points >= 1");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = a;
    return out;
  }
  for (int i = 0; i < points; ++i)
    out[i] = a + (b - a) * static_cast<double>(i) / (points - 1);
  out.back() = b;
  return out;
}

DynamicalFamily::DynamicalFamily(std::string label, Index dim,
                                 TimeDomain domain, ChannelGenerator generator,
                                 int check_points)
    : label_(std::move(label)),
      dim_(dim),
      domain_(domain),
      gen_(std::move(generator)) {
  if (!(domain_.t_min <= domain_.t_max))
    throw InvalidFamily(domain_.t_min, "empty time domain");
  std::vector<double> ts =
      check_points < 2 ? std::vector<double>{domain_.t_min}
                       : linspace(domain_.t_min, domain_.t_max, check_points);
  for (double t : ts) {
    Channel ch = gen_(t);
    if (ch.dim_in() != dim_ || ch.dim_out() != dim_)
      throw InvalidFamily(t, "generator returned the wrong dimension");
    if (tp_defect(ch) > kFamilyTpTol)
      throw InvalidFamily(t, "map is not trace preserving");
    if (!is_cp(ch)) throw InvalidFamily(t, "map is not completely positive");
  }
}

Channel DynamicalFamily::at(double t) const {
  if (!domain_.contains(t))
    throw DomainExceeded(t, domain_.t_min, domain_.t_max);
  return gen_(t);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotPDivisible:
      return "NOT_P_DIVISIBLE";
    case Verdict::NotCpDivisible:
      return "NOT_CP_DIVISIBLE";
    case Verdict::PEvidence:
      return "P_EVIDENCE";
    case Verdict::CpEvidence:
      return "CP_EVIDENCE";
    case Verdict::DivisibleKernelOk:
      return "DIVISIBLE_KERNEL_OK";
    case Verdict::NotDivisible:
      return "NOT_DIVISIBLE";
  }
  return "UNKNOWN";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::NotPDivisible, Verdict::NotCpDivisible,
                    Verdict::PEvidence, Verdict::CpEvidence,
                    Verdict::DivisibleKernelOk, Verdict::NotDivisible})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict: " + s);
}

bool is_violation(Verdict v) {
  return v == Verdict::NotPDivisible || v == Verdict::NotCpDivisible ||
         v == Verdict::NotDivisible;
}

double default_step(const TimeDomain& dom) { return 1e-4 * dom.length(); }

namespace {

using NormFn = std::function<double(const Channel&, const HermitianOperator&)>;

double p_norm(const Channel& ch, const HermitianOperator& x) {
  return trace_norm(apply(ch, x));
}

double cp_norm(const Channel& ch, const HermitianOperator& y) {
  return trace_norm(apply_extended(ch, y, ch.dim_in()));
}

void check_step(const DynamicalFamily& fam, double t, double h) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be > 0");
  const TimeDomain& dom = fam.domain();
  for (double u : {t - h, t + h})
    if (!dom.contains(u)) throw DomainExceeded(u, dom.t_min, dom.t_max);
}

double derivative(const DynamicalFamily& fam, const HermitianOperator& x,
                  double t, double h, const NormFn& norm) {
  check_step(fam, t, h);
  return (norm(fam.at(t + h), x) - norm(fam.at(t - h), x)) / (2 * h);
}

DivisibilityReport scan(const DynamicalFamily& fam,
                        const std::vector<HermitianOperator>& witnesses,
                        const std::vector<double>& grid, double h,
                        double tau_slope, Index witness_dim, const NormFn& norm,
                        Verdict violation, Verdict evidence) {
  for (const HermitianOperator& w : witnesses)
    if (w.dim() != witness_dim)
      throw DimensionMismatch("witness dimension " + std::to_string(w.dim()) +
                              ", expected " + std::to_string(witness_dim));
  for (double t : grid) check_step(fam, t, h);

  const std::size_t nw = witnesses.size();
  std::vector<SweepRow> rows(grid.size() * nw);
  parallel_for(grid.size(), [&](std::size_t g) {
    const double t = grid[g];
    Channel lo = fam.at(t - h), mid = fam.at(t), hi = fam.at(t + h);
    for (std::size_t w = 0; w < nw; ++w) {
      const HermitianOperator& x = witnesses[w];
      double der = (norm(hi, x) - norm(lo, x)) / (2 * h);
      rows[g * nw + w] = {t, w, norm(mid, x), der, der > tau_slope};
    }
  });

  DivisibilityReport rep;
  rep.grid = grid;
  rep.verdict = evidence;
  rep.note = kScanNote;
  const SweepRow* best = nullptr;
  for (const SweepRow& r : rows)
    if (!best || r.derivative > best->derivative) best = &r;
  if (best) {
    rep.max_derivative = best->derivative;
    if (best->derivative > tau_slope) {
      rep.verdict = violation;
      rep.witness = Witness{best->t, witnesses[best->witness_id],
                            best->derivative, best->witness_id};
      rep.note.clear();
    }
  }
  rep.rows = std::move(rows);
  return rep;
}

}  // namespace

double p_derivative(const DynamicalFamily& fam, const HermitianOperator& x,
                    double t, double h) {
  return derivative(fam, x, t, h, p_norm);
}

double cp_derivative(const DynamicalFamily& fam, const HermitianOperator& y,
                     double t, double h) {
  return derivative(fam, y, t, h, cp_norm);
}

DivisibilityReport p_divisibility_scan(
    const DynamicalFamily& fam, const std::vector<HermitianOperator>& witnesses,
    const std::vector<double>& grid, double h, double tau_slope) {
  return scan(fam, witnesses, grid, h, tau_slope, fam.dim(), p_norm,
              Verdict::NotPDivisible, Verdict::PEvidence);
}

DivisibilityReport cp_divisibility_scan(
    const DynamicalFamily& fam, const std::vector<HermitianOperator>& witnesses,
    const std::vector<double>& grid, double h, double tau_slope) {
  return scan(fam, witnesses, grid, h, tau_slope, fam.dim() * fam.dim(),
              cp_norm, Verdict::NotCpDivisible, Verdict::CpEvidence);
}

std::vector<HermitianOperator> default_witnesses(Index d, std::uint64_t seed) {
  std::vector<HermitianOperator> out;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      out.push_back(HermitianOperator::unit_difference(d, i, j));
  Rng rng(seed);
  for (int s = 0; s < 20; ++s) out.push_back(random_projector_difference(d, rng));
  for (int s = 0; s < 20; ++s) out.push_back(random_hermitian(d, rng));
  return out;
}

std::vector<CVector> numerical_kernel(const Channel& ch, double rcond) {
  Eigen::BDCSVD<CMatrix> svd(ch.superoperator(), Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  const CMatrix& v = svd.matrixV();
  const double cut = sv.size() ? rcond * sv(0) : 0.0;
  std::vector<CVector> ker;
  for (Index j = 0; j < v.cols(); ++j)
    if (j >= sv.size() || sv(j) <= cut) ker.push_back(v.col(j));
  return ker;
}

bool kernel_inclusion_divisible(const DynamicalFamily& fam, double s, double t,
                                double rcond, double tau_ker) {
  if (!(s < t)) throw std::invalid_argument("kernel inclusion needs s < t");
  Channel ls = fam.at(s), lt = fam.at(t);
  for (const CVector& v : numerical_kernel(ls, rcond))
    if ((lt.superoperator() * v).norm() > tau_ker) return false;
  return true;
}

IntermediateMap intermediate_map(const DynamicalFamily& fam, double s, double t,
                                 double rcond, int samples,
                                 std::uint64_t seed) {
  if (s > t) throw std::invalid_argument("intermediate map needs s <= t");
  Channel ls = fam.at(s), lt = fam.at(t);
  Channel map = compose(lt, inverse(ls, rcond));
  ContractivityResult ev = positivity_by_contractivity(map, samples, seed);
  bool cp = is_cp(map);
  return {std::move(map), ev.verdict, cp, std::move(ev)};
}

}  // namespace qdiv
