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

#include <stdexcept>
#include <string>
#include <vector>

namespace qdiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHermitianInput : public Error {
 public:
  explicit NonHermitianInput(double defect);
  double defect;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class SingularChannel : public Error {
 public:
  SingularChannel(std::vector<double> singular_values, double rcond);
  std::vector<double> singular_values;  // descending
  double rcond;
};

class DomainExceeded : public Error {
 public:
  DomainExceeded(double t, double t_min, double t_max);
  double t;
};

class DegenerateDenominator : public Error {
 public:
  // index is the 1-based length of the vanishing partial sum
  explicit DegenerateDenominator(int index);
  int index;
};

class InvalidFamily : public Error {
 public:
  InvalidFamily(double t, const std::string& why);
  double t;
};

class OutsideValidityWindow : public Error {
 public:
  explicit OutsideValidityWindow(double t);
  double t;
};

class InvalidState : public Error {
 public:
  explicit InvalidState(double min_eig);
  double min_eig;
};

class InvalidChannel : public Error {
 public:
  explicit InvalidChannel(double min_eig);
  double min_eig;
};

class NotSymplectic : public Error {
 public:
  NotSymplectic(std::string factor, double residual);
  std::string factor;
  double residual;
};

class InvalidDilation : public Error {
 public:
  explicit InvalidDilation(double min_eig);
  double min_eig;
};

class SingularX : public Error {
 public:
  SingularX(double t, double det);
  double t;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& why);
  std::string field;
};

}  // namespace qdiv
