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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "kummer_lcd/curve.hpp"

namespace kummer_lcd::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2 };

/// Row-labelled matrix of display strings, printed by --pretty only.
struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
};

/// Structured result of one command.
struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json checks = nlohmann::json::array();
    std::vector<Table> tables;

    void check(const std::string& name, bool pass, const std::string& detail = {});
    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// Looks `name` up as a file, then in $KUMMER_LCD_SPEC_DIR and the bundled
/// spec directory (with or without ".json"), then as a built-in family name
/// such as "hermitian-q3" or "norm-trace-q2-r3".
KummerCurve resolve_curve(const std::string& name);

/// Runs the tool on `args` (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummer_lcd::cli
