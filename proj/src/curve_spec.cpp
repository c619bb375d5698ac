/*
 * Copyright 2026 The kummer-lcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kummer_lcd/curve_spec.hpp"

#include <fstream>

namespace kummer_lcd {

KummerCurve curve_from_json(const nlohmann::json& spec) {
    try {
        const int p = spec.at("p").get<int>();
        const int k = spec.at("k").get<int>();
        FieldPtr field = spec.contains("modulus")
                             ? GaloisField::make(p, k, spec.at("modulus").get<std::vector<int>>())
                             : GaloisField::make(p, k);
        std::vector<Elem> alphas;
        for (const auto& a : spec.at("alphas")) {
            if (a.is_string())
                alphas.push_back(field->parse(a.get<std::string>()));
            else
                alphas.push_back(field->from_coeffs(a.get<std::vector<int>>()));
        }
        return KummerCurve(field, std::move(alphas), spec.at("m").get<int>(), spec.value("label", std::string{}));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed curve spec: ") + e.what());
    }
}

nlohmann::json curve_to_json(const KummerCurve& C) {
    nlohmann::json alphas = nlohmann::json::array();
    for (auto a : C.alphas()) alphas.push_back(C.F().coeffs(a));
    return {
        {"p", C.F().characteristic()},
        {"k", C.F().degree()},
        {"modulus", C.F().spec().modulus},
        {"m", C.m()},
        {"alphas", alphas},
        {"label", C.label()},
    };
}

KummerCurve load_curve_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read curve spec '" + path.string() + "'");
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("curve spec '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return curve_from_json(spec);
}

}  // namespace kummer_lcd
