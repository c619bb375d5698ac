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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kummer_lcd/ag_code.hpp"

namespace kummer_lcd {

/// "(a,b)" with coordinates in field text form.
std::string column_label(const KummerCurve& C, const Place& P);

/// Header row of quoted column labels, then one quoted row per generator row.
std::string matrix_to_csv(const KummerCurve& C, const Matrix& M, std::span<const Place> labels);

struct LabelledMatrix {
    std::vector<Place> labels;
    Matrix matrix;
};
LabelledMatrix matrix_from_csv(const KummerCurve& C, std::string_view csv);

/// Rows as arrays of field text strings.
nlohmann::json matrix_to_json(const GaloisField& F, const Matrix& M);
Matrix matrix_from_json(const GaloisField& F, const nlohmann::json& j, std::size_t cols);

}  // namespace kummer_lcd
