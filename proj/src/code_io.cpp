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

#include "kummer_lcd/code_io.hpp"

#include <sstream>

namespace kummer_lcd {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// One CSV record; cells may be double-quoted (no embedded quotes).
std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> cells;
    std::string cur;
    bool in_quotes = false, quoted_cell = false;
    for (char ch : line) {
        if (ch == '"') {
            in_quotes = !in_quotes;
            quoted_cell = true;
        } else if (ch == ',' && !in_quotes) {
            cells.push_back(std::move(cur));
            cur.clear();
            quoted_cell = false;
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (in_quotes) throw ParseError("unterminated quote in CSV record");
    if (!cur.empty() || quoted_cell || !cells.empty()) cells.push_back(std::move(cur));
    return cells;
}

}  // namespace

std::string column_label(const KummerCurve& C, const Place& P) {
    if (!P.is_affine()) throw CodeError("column labels are affine places");
    return "(" + C.F().to_string(P.a) + "," + C.F().to_string(P.b) + ")";
}

std::string matrix_to_csv(const KummerCurve& C, const Matrix& M, std::span<const Place> labels) {
    if (labels.size() != M.cols()) throw CodeError("label count does not match matrix width");
    std::ostringstream out;
    for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? "," : "") << quoted(column_label(C, labels[j]));
    out << '\n';
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) out << (j ? "," : "") << quoted(C.F().to_string(M(i, j)));
        out << '\n';
    }
    return out.str();
}

LabelledMatrix matrix_from_csv(const KummerCurve& C, std::string_view csv) {
    LabelledMatrix out;
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV");
    for (const auto& cell : split_record(line)) out.labels.push_back(C.parse_place("P" + cell));
    out.matrix = Matrix(0, out.labels.size());
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_record(line);
        if (cells.size() != out.labels.size()) throw ParseError("CSV row width differs from header");
        std::vector<Elem> row;
        for (const auto& cell : cells) row.push_back(C.F().parse(cell));
        out.matrix.append_row(row);
    }
    return out;
}

nlohmann::json matrix_to_json(const GaloisField& F, const Matrix& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(F.to_string(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const GaloisField& F, const nlohmann::json& j, std::size_t cols) {
    Matrix M(0, cols);
    try {
        for (const auto& row : j) {
            std::vector<Elem> r;
            for (const auto& cell : row) r.push_back(F.parse(cell.get<std::string>()));
            M.append_row(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return M;
}

}  // namespace kummer_lcd
