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

#include "qdiv/errors.hpp"

#include <sstream>

namespace qdiv {

namespace {
std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}
}  // namespace

NonHermitianInput::NonHermitianInput(double defect)
    : Error("non-Hermitian input: max |H - H^dag| = " + num(defect)),
      defect(defect) {}

SingularChannel::SingularChannel(std::vector<double> sv, double rcond)
    : Error("singular channel: sigma_min/sigma_max = " +
            num(sv.empty() || sv.front() == 0.0 ? 0.0
                                                : sv.back() / sv.front()) +
            " below rcond " + num(rcond) +
            "; use the kernel-inclusion test instead"),
      singular_values(std::move(sv)),
      rcond(rcond) {}

DomainExceeded::DomainExceeded(double t, double t_min, double t_max)
    : Error("time " + num(t) + " outside domain [" + num(t_min) + ", " +
            num(t_max) + "]"),
      t(t) {}

DegenerateDenominator::DegenerateDenominator(int index)
    : Error("partial sum of the first " + std::to_string(index) +
            " coefficients vanishes"),
      index(index) {}

InvalidFamily::InvalidFamily(double t, const std::string& why)
    : Error("invalid family at t = " + num(t) + ": " + why), t(t) {}

OutsideValidityWindow::OutsideValidityWindow(double t)
    : Error("t = " + num(t) + " outside the positivity window [0, 1/2]"),
      t(t) {}

InvalidState::InvalidState(double min_eig)
    : Error("invalid covariance matrix: lambda_min(2S + iJ) = " +
            num(min_eig)),
      min_eig(min_eig) {}

InvalidChannel::InvalidChannel(double min_eig)
    : Error("invalid Gaussian channel: lambda_min(Y - i(J - XJX^T)) = " +
            num(min_eig)),
      min_eig(min_eig) {}

NotSymplectic::NotSymplectic(std::string factor, double residual)
    : Error("factor " + factor + " is not symplectic: |RJR^T - J|_max = " +
            num(residual)),
      factor(std::move(factor)),
      residual(residual) {}

InvalidDilation::InvalidDilation(double min_eig)
    : Error("dilation produced an invalid channel: lambda_min = " +
            num(min_eig)),
      min_eig(min_eig) {}

SingularX::SingularX(double t, double det)
    : Error("X_t singular at t = " + num(t) + " (det = " + num(det) + ")"),
      t(t) {}

ConfigError::ConfigError(std::string field, const std::string& why)
    : Error("config field '" + field + "': " + why), field(std::move(field)) {}

}  // namespace qdiv
