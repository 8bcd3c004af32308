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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdiv/channel.hpp"
#include "qdiv/divisibility.hpp"
#include "qdiv/gaussian.hpp"
#include "qdiv/schur.hpp"

namespace qdiv {

using Json = nlohmann::json;

// %.17g
std::string format_double(double x);

// rows of [re, im] pairs
Json complex_matrix_to_json(const CMatrix& m);
CMatrix complex_matrix_from_json(const Json& j);
Json real_matrix_to_json(const RMatrix& m);
RMatrix real_matrix_from_json(const Json& j);

// {dim_in, dim_out, kraus: [...]} when a Kraus list is present, else
// {dim_in, dim_out, super: ...}
Json channel_to_json(const Channel& ch);
Channel channel_from_json(const Json& j);

// {verdict, witness_t, derivative, witness_matrix, witness_id,
//  max_derivative, grid, note}
Json report_to_json(const DivisibilityReport& rep);

// t,witness_id,value,derivative,flag
void write_sweep_csv(std::ostream& os, const DivisibilityReport& rep);

// {m, X, Y}
Json gaussian_to_json(const GaussianPair& g);
GaussianPair gaussian_from_json(const Json& j);

// t,det,ddet,violation
void write_det_csv(std::ostream& os, const DetScanReport& rep);

// t,trace_norm,derivative,n
void write_growth_csv(std::ostream& os, const std::vector<GrowthRow>& rows,
                      Index n);

}  // namespace qdiv
