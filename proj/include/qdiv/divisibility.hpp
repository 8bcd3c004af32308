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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdiv/channel.hpp"

namespace qdiv {

inline constexpr double kSlopeTol = 1e-6;
inline constexpr double kKernelTol = 1e-8;

struct TimeDomain {
  double t_min = 0.0;
  double t_max = 1.0;
  bool contains(double t) const;
  double length() const { return t_max - t_min; }
};

std::vector<double> linspace(double a, double b, int points);

using ChannelGenerator = std::function<Channel(double)>;

// t -> Lambda_t, checked CP and TP at check_points evenly spaced times.
class DynamicalFamily {
 public:
  DynamicalFamily(std::string label, Index dim, TimeDomain domain,
                  ChannelGenerator generator, int check_points = 11);

  Channel at(double t) const;
  const std::string& label() const { return label_; }
  Index dim() const { return dim_; }
  const TimeDomain& domain() const { return domain_; }

 private:
  std::string label_;
  Index dim_;
  TimeDomain domain_;
  ChannelGenerator gen_;
};

enum class Verdict {
  NotPDivisible,
  NotCpDivisible,
  PEvidence,
  CpEvidence,
  DivisibleKernelOk,
  NotDivisible,
};
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);
bool is_violation(Verdict v);

struct Witness {
  double t;
  HermitianOperator op;
  double derivative;
  std::size_t id;
};

struct SweepRow {
  double t;
  std::size_t witness_id;
  double value;       // trace norm at t
  double derivative;  // central difference
  bool flag;          // derivative > tau_slope
};

struct DivisibilityReport {
  Verdict verdict = Verdict::PEvidence;
  std::optional<Witness> witness;
  std::vector<double> grid;
  std::vector<SweepRow> rows;
  double max_derivative = 0.0;
  std::string note;
};

// 1e-4 of the domain length
double default_step(const TimeDomain& dom);

// d/dt |Lambda_t(X)|_1 by central difference
double p_derivative(const DynamicalFamily& fam, const HermitianOperator& x,
                    double t, double h);
// d/dt |(I (x) Lambda_t)(Y)|_1 by central difference
double cp_derivative(const DynamicalFamily& fam, const HermitianOperator& y,
                     double t, double h);

DivisibilityReport p_divisibility_scan(
    const DynamicalFamily& fam, const std::vector<HermitianOperator>& witnesses,
    const std::vector<double>& grid, double h, double tau_slope = kSlopeTol);

// witnesses live on H (x) H, ancilla first
DivisibilityReport cp_divisibility_scan(
    const DynamicalFamily& fam, const std::vector<HermitianOperator>& witnesses,
    const std::vector<double>& grid, double h, double tau_slope = kSlopeTol);

// All E_ii - E_jj, 20 random projector differences, 20 random Hermitians.
std::vector<HermitianOperator> default_witnesses(Index d, std::uint64_t seed);

// Orthonormal basis of the numerical kernel (sigma <= rcond * sigma_max).
std::vector<CVector> numerical_kernel(const Channel& ch, double rcond = kRcond);

bool kernel_inclusion_divisible(const DynamicalFamily& fam, double s, double t,
                                double rcond = kRcond,
                                double tau_ker = kKernelTol);

struct IntermediateMap {
  Channel map;
  bool p;   // no contractivity witness found
  bool cp;
  ContractivityResult evidence;
};

// Lambda_t Lambda_s^{-1}; throws SingularChannel when Lambda_s is not
// invertible at rcond.
IntermediateMap intermediate_map(const DynamicalFamily& fam, double s, double t,
                                 double rcond = kRcond, int samples = 200,
                                 std::uint64_t seed = 0);

}  // namespace qdiv
