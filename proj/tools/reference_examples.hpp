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
#include <vector>

#include "cli.hpp"

namespace kummer_lcd::cli {

/// Names accepted by `verify paper-examples --which`, "all" excluded.
const std::vector<std::string>& reference_example_names();

/// Runs one published example end to end, appending checks and results
/// (under results[<name>]) to `rep`. Throws ParseError for unknown names.
void verify_reference_example(const std::string& which, RunReport& rep, unsigned jobs);

}  // namespace kummer_lcd::cli
