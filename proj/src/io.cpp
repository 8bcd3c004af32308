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

#include "qdiv/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qdiv/errors.hpp"

namespace qdiv {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json complex_matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("complex matrix must be a non-empty array of rows");
  const Index rows = j.size(), cols = j[0].size();
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (static_cast<Index>(j[r].size()) != cols)
      throw std::invalid_argument("ragged complex matrix");
    for (Index c = 0; c < cols; ++c) {
      const Json& e = j[r][c];
      if (e.is_number())
        m(r, c) = e.get<double>();
      else
        m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

Json real_matrix_to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("real matrix must be a non-empty array of rows");
  const Index rows = j.size(), cols = j[0].size();
  RMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (static_cast<Index>(j[r].size()) != cols)
      throw std::invalid_argument("ragged real matrix");
    for (Index c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

Json channel_to_json(const Channel& ch) {
  Json j{{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}};
  if (ch.kraus()) {
    Json ks = Json::array();
    for (const CMatrix& k : *ch.kraus()) ks.push_back(complex_matrix_to_json(k));
    j["kraus"] = std::move(ks);
  } else {
    j["super"] = complex_matrix_to_json(ch.superoperator());
  }
  return j;
}

Channel channel_from_json(const Json& j) {
  const Index din = j.at("dim_in").get<Index>();
  const Index dout = j.at("dim_out").get<Index>();
  if (j.contains("kraus")) {
    std::vector<CMatrix> ks;
    for (const Json& k : j.at("kraus")) ks.push_back(complex_matrix_from_json(k));
    Channel ch = Channel::from_kraus(std::move(ks));
    if (ch.dim_in() != din || ch.dim_out() != dout)
      throw DimensionMismatch("Kraus shape disagrees with dim_in/dim_out");
    return ch;
  }
  return Channel(complex_matrix_from_json(j.at("super")), din, dout);
}

Json report_to_json(const DivisibilityReport& rep) {
  Json j{{"verdict", to_string(rep.verdict)},
         {"max_derivative", rep.max_derivative},
         {"grid", rep.grid},
         {"note", rep.note}};
  if (rep.witness) {
    j["witness_t"] = rep.witness->t;
    j["derivative"] = rep.witness->derivative;
    j["witness_id"] = rep.witness->id;
    j["witness_matrix"] = complex_matrix_to_json(rep.witness->op.matrix());
  } else {
    j["witness_t"] = nullptr;
    j["derivative"] = rep.max_derivative;
    j["witness_id"] = nullptr;
    j["witness_matrix"] = nullptr;
  }
  return j;
}

void write_sweep_csv(std::ostream& os, const DivisibilityReport& rep) {
  os << "t,witness_id,value,derivative,flag\n";
  for (const SweepRow& r : rep.rows)
    os << format_double(r.t) << ',' << r.witness_id << ','
       << format_double(r.value) << ',' << format_double(r.derivative) << ','
       << (r.flag ? 1 : 0) << '\n';
}

Json gaussian_to_json(const GaussianPair& g) {
  return {{"m", g.modes()},
          {"X", real_matrix_to_json(g.X())},
          {"Y", real_matrix_to_json(g.Y())}};
}

GaussianPair gaussian_from_json(const Json& j) {
  GaussianPair g(real_matrix_from_json(j.at("X")),
                 real_matrix_from_json(j.at("Y")));
  if (g.modes() != j.at("m").get<Index>())
    throw DimensionMismatch("m disagrees with the size of X");
  return g;
}

void write_det_csv(std::ostream& os, const DetScanReport& rep) {
  os << "t,det,ddet,violation\n";
  for (const DetScanRow& r : rep.rows)
    os << format_double(r.t) << ',' << format_double(r.det) << ','
       << format_double(r.ddet) << ',' << (r.violation ? 1 : 0) << '\n';
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows,
                      Index n) {
  os << "t,trace_norm,derivative,n\n";
  for (const GrowthRow& r : rows)
    os << format_double(r.t) << ',' << format_double(r.trace_norm) << ','
       << format_double(r.derivative) << ',' << n << '\n';
}

}  // namespace qdiv
