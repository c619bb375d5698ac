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

#include <filesystem>

#include "json.hpp"
#include "kummer_lcd/curve.hpp"

namespace kummer_lcd {

// Curve-spec files:
//   { "p": 2, "k": 2, "modulus": [1,1,1], "m": 3,
//     "alphas": [[0,0],[1,0]], "label": "hermitian-q2" }
// "modulus" is optional (pinned default). Alphas may also be given as
// strings in field text form ("[1,0]", "a^2", ...).

KummerCurve curve_from_json(const nlohmann::json& spec);
nlohmann::json curve_to_json(const KummerCurve& C);
KummerCurve load_curve_spec(const std::filesystem::path& path);

}  // namespace kummer_lcd
