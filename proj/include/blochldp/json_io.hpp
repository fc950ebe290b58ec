// Copyright 2026 The blochldp Authors
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

#ifndef BLOCHLDP_JSON_IO_HPP
#define BLOCHLDP_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "blochldp/lindblad.hpp"
#include "blochldp/mat2.hpp"

namespace blochldp {

using nlohmann::json;

/// Matrices are encoded row-major as [re, im] pairs, e.g.
/// sigma_3 = [[[1,0],[0,0]],[[0,0],[-1,0]]].
json to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

json to_json(const Complex& z);  // [re, im]
Complex complex_from_json(const json& j);

/// Generator schema:
///   {"form":"gks","xi":...,"eta":...,"nu":...,"zeta":[re,im]}
///   {"form":"yz","y":M,"z1":M,"z2":M,"e1":[[re,im],[re,im]]}
/// e2 is derived as the canonical unit vector orthogonal to e1.
using GeneratorSpec = std::variant<GKSParams, YZGenerator>;
GeneratorSpec generator_from_json(const json& j);
json to_json(const GKSParams& p);
json to_json(const YZGenerator& g);

/// %.17g formatting, used for all CSV output.
std::string format_double(double v);

}  // namespace blochldp

#endif  // BLOCHLDP_JSON_IO_HPP
