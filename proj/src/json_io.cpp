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

#include "blochldp/json_io.hpp"

#include <cstdio>

namespace blochldp {

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("expected a complex number as [re, im]");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json to_json(const Mat2& m) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ConfigError("matrix: expected 2 rows");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2) throw ConfigError("matrix: expected 2 columns");
        for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json to_json(const GKSParams& p) {
    return json{{"form", "gks"}, {"xi", p.xi}, {"eta", p.eta}, {"nu", p.nu},
                {"zeta", to_json(p.zeta)}};
}

json to_json(const YZGenerator& g) {
    return json{{"form", "yz"},
                {"y", to_json(g.y)},
                {"z1", to_json(g.z1)},
                {"z2", to_json(g.z2)},
                {"e1", json::array({to_json(g.e1.x), to_json(g.e1.y)})}};
}

GeneratorSpec generator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("form") || !j["form"].is_string()) {
        throw ConfigError("generator: missing \"form\"");
    }
    const std::string form = j["form"].get<std::string>();
    if (form == "gks") {
        for (const char* key : {"xi", "eta", "nu"}) {
            if (!j.contains(key) || !j[key].is_number()) {
                throw ConfigError(std::string("generator: missing numeric \"") + key + "\"");
            }
        }
        GKSParams p;
        p.xi = j["xi"].get<double>();
        p.eta = j["eta"].get<double>();
        p.nu = j["nu"].get<double>();
        p.zeta = j.contains("zeta") ? complex_from_json(j["zeta"]) : Complex(0.0);
        return p;
    }
    if (form == "yz") {
        for (const char* key : {"y", "z1", "z2", "e1"}) {
            if (!j.contains(key)) {
                throw ConfigError(std::string("generator: missing \"") + key + "\"");
            }
        }
        YZGenerator g;
        g.y = mat2_from_json(j["y"]);
        g.z1 = mat2_from_json(j["z1"]);
        g.z2 = mat2_from_json(j["z2"]);
        const json& e1 = j["e1"];
        if (!e1.is_array() || e1.size() != 2) throw ConfigError("generator: e1 must be 2 entries");
        g.e1 = Vec2{complex_from_json(e1[0]), complex_from_json(e1[1])};
        const double n = norm(g.e1);
        if (n < 1e-12) throw ConfigError("generator: e1 must be nonzero");
        g.e1 = Vec2{g.e1.x / n, g.e1.y / n};
        g.e2 = orthogonal_unit(g.e1);
        return g;
    }
    throw ConfigError("generator: unknown form \"" + form + "\"");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace blochldp
