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

#include "reference_examples.hpp"

#include <array>

#include "kummer_lcd/ag_code.hpp"
#include "kummer_lcd/code_io.hpp"
#include "kummer_lcd/families.hpp"

namespace kummer_lcd::cli {

namespace {

using nlohmann::json;

// x^t * prod_i (y - alpha_i)^{exps[i]} with a display name.
struct NamedMonomial {
    std::string name;
    int t;
    std::vector<int> exps;
};

bool in_riemann_roch_space(const KummerCurve& C, const FunctionElement& f, const Divisor& G) {
    std::vector<Place> places{Place::infinity()};
    for (int i = 1; i <= C.r(); ++i) places.push_back(Place::ramified(i));
    for (const auto& P : places)
        if (valuation(C, f, P).value + G.coefficient(P) < 0) return false;
    return true;
}

std::vector<FunctionElement> build(const KummerCurve& C, const std::vector<NamedMonomial>& fs) {
    std::vector<FunctionElement> out;
    for (const auto& f : fs) out.push_back(FunctionElement::monomial(C, f.t, f.exps));
    return out;
}

std::string symbol_label(const KummerCurve& C, const Place& P) {
    return "(" + C.F().symbol(P.a) + "," + C.F().symbol(P.b) + ")";
}

Table make_table(const KummerCurve& C, std::string title, std::span<const Place> cols,
                 const std::vector<NamedMonomial>& rows, const Matrix& M) {
    Table t;
    t.title = std::move(title);
    for (const auto& P : cols) t.columns.push_back(symbol_label(C, P));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.row_labels.push_back(rows[i].name);
        std::vector<std::string> r;
        for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(C.F().symbol(M(i, j)));
        t.cells.push_back(std::move(r));
    }
    return t;
}

Matrix parse_symbol_rows(const GaloisField& F, const std::vector<std::array<const char*, 6>>& rows) {
    Matrix M(0, 6);
    for (const auto& r : rows) {
        std::vector<Elem> v;
        for (const char* s : r) v.push_back(F.parse(s));
        M.append_row(v);
    }
    return M;
}

void common_curve_checks(RunReport& rep, const std::string& tag, const KummerCurve& C, std::size_t points, int genus,
                         int deg_D) {
    rep.check(tag + ".rational_points", C.rational_points().size() == points,
              std::to_string(C.rational_points().size()) + " (expected " + std::to_string(points) + ")");
    rep.check(tag + ".genus", C.genus() == genus, std::to_string(C.genus()));
    rep.check(tag + ".deg_D", C.standard_D().degree() == deg_D, std::to_string(C.standard_D().degree()));
}

// Published functions lie in L(X) and their evaluations span C(D,X).
void spanning_checks(RunReport& rep, const std::string& tag, const KummerCurve& C, const std::vector<NamedMonomial>& fs,
                     const Divisor& X, const LinearCode& code, std::span<const Place> points) {
    auto funcs = build(C, fs);
    bool inside = true;
    for (const auto& f : funcs) inside = inside && in_riemann_roch_space(C, f, X);
    rep.check(tag + ".functions_in_space", inside, std::to_string(funcs.size()) + " functions");
    Matrix E = evaluation_matrix(C, funcs, points);
    rep.check(tag + ".functions_span_code", linalg::same_row_space(C.F(), E, code.generator),
              "rank " + std::to_string(linalg::rank(C.F(), E)));
}

void hermitian_q2(RunReport& rep, unsigned jobs) {
    const std::string tag = "hermitian-q2";
    KummerCurve C = hermitian_curve(2);
    const auto& F = C.F();
    common_curve_checks(rep, tag, C, 9, 1, 6);

    // Columns as printed: b-major over b in {a, a^2}, a in {a, a^2, 1}.
    std::vector<Place> cols;
    for (const char* b : {"a", "a^2"})
        for (const char* a : {"a", "a^2", "1"}) cols.push_back(Place::affine(F.parse(a), F.parse(b)));

    const Divisor G = C.parse_divisor("3*Pinf+1*P1");
    const Divisor H = C.parse_divisor("1*P1+2*P2-1*Pinf");
    const std::vector<NamedMonomial> g_rows{
        {"x^2/y", 2, {-1, 0}}, {"y", 0, {1, 0}}, {"x", 1, {0, 0}}, {"1", 0, {0, 0}}};
    const std::vector<NamedMonomial> h_rows{{"1/x", -1, {0, 0}}, {"x/(y+1)", 1, {0, -1}}};
    const Matrix g_golden = parse_symbol_rows(F, {{"a", "1", "a^2", "1", "a^2", "a"},
                                                  {"a", "a", "a", "a^2", "a^2", "a^2"},
                                                  {"a", "a^2", "1", "a", "a^2", "1"},
                                                  {"1", "1", "1", "1", "1", "1"}});
    const Matrix h_golden = parse_symbol_rows(F, {{"a^2", "a", "1", "a^2", "a", "1"}, {"a^2", "1", "a", "1", "a", "a^2"}});

    const Matrix g_eval = evaluation_matrix(C, build(C, g_rows), cols);
    const Matrix h_eval = evaluation_matrix(C, build(C, h_rows), cols);
    rep.check(tag + ".golden_matrix_G", g_eval == g_golden, "4x6 entry-for-entry");
    rep.check(tag + ".golden_matrix_H", h_eval == h_golden, "2x6 entry-for-entry");

    LinearCode cg = build_code(C, cols, G);
    LinearCode ch = build_code(C, cols, H);
    spanning_checks(rep, tag + ".G", C, g_rows, G, cg, cols);
    spanning_checks(rep, tag + ".H", C, h_rows, H, ch, cols);
    rep.check(tag + ".dim_C(D,G)", cg.k == 4, std::to_string(cg.k));
    rep.check(tag + ".dim_C(D,H)", ch.k == 2, std::to_string(ch.k));
    rep.check(tag + ".dual_partner", dual_partner_divisor(C, G) == H, C.divisor_to_string(dual_partner_divisor(C, G)));
    rep.check(tag + ".duality", orthogonal(cg, ch) && cg.k + ch.k == cg.n && same_code(dual(cg), ch));
    const std::size_t hd = hull(cg).k;
    rep.check(tag + ".hull_trivial", hd == 0, "hull dim " + std::to_string(hd));
    auto thm = verify_hull_theorem(C, cols, G, H);
    rep.check(tag + ".hull_equals_code_of_gcd", thm.conclusions_hold(), C.divisor_to_string(thm.gcdGH));
    auto dg = min_distance(cg, std::uint64_t{1} << 24, jobs);
    auto dh = min_distance(ch, std::uint64_t{1} << 24, jobs);
    const int sum = dg.distance.value_or(-1) + dh.distance.value_or(-1);
    rep.check(tag + ".min_distance_sum", sum == 6,
              std::to_string(dg.distance.value_or(-1)) + " + " + std::to_string(dh.distance.value_or(-1)));

    json cols_json = json::array();
    for (const auto& P : cols) cols_json.push_back(column_label(C, P));
    rep.results[tag] = {
        {"G", C.divisor_to_string(G)},
        {"H", C.divisor_to_string(H)},
        {"columns", cols_json},
        {"matrix_G", matrix_to_json(F, g_eval)},
        {"matrix_H", matrix_to_json(F, h_eval)},
        {"k_G", cg.k},
        {"k_H", ch.k},
        {"hull_dim", hd},
        {"d_G", dg.distance.value_or(-1)},
        {"d_H", dh.distance.value_or(-1)},
    };
    rep.tables.push_back(make_table(C, "C(D,G), G = " + C.divisor_to_string(G), cols, g_rows, g_eval));
    rep.tables.push_back(make_table(C, "C(D,H), H = " + C.divisor_to_string(H), cols, h_rows, h_eval));
}

void quintic_gf16(RunReport& rep) {
    const std::string tag = "gf16-quintic";
    KummerCurve C = trace_quotient_curve(4);
    common_curve_checks(rep, tag, C, 33, 2, 30);
    const Divisor G = C.parse_divisor("4*Pinf+12*P1-1*P2");
    const Divisor H = C.parse_divisor("2*P1+15*P2");
    // alpha_1 = 0 and alpha_2 = 1, so y - alpha_2 = y + 1.
    const std::vector<NamedMonomial> g_funcs{
        {"x", 1, {0, 0}},         {"x^2", 2, {0, 0}},       {"x/y", 1, {-1, 0}},      {"x^2/y", 2, {-1, 0}},
        {"x^3/y", 3, {-1, 0}},    {"x^4/y", 4, {-1, 0}},    {"x/y^2", 1, {-2, 0}},    {"x^2/y^2", 2, {-2, 0}},
        {"x^3/y^2", 3, {-2, 0}},  {"x^4/y^2", 4, {-2, 0}},  {"x^5/y^2", 5, {-2, 0}},  {"x^3/y^3", 3, {-3, 0}},
        {"x^4/y^3", 4, {-3, 0}},  {"x^5/y^3", 5, {-3, 0}}};
    const std::vector<NamedMonomial> h_funcs{
        {"1", 0, {0, 0}},          {"1/x^2", -2, {0, 0}},         {"1/x", -1, {0, 0}},
        {"1/(x^2(y+1))", -2, {0, -1}}, {"1/(x(y+1))", -1, {0, -1}}, {"1/(y+1)", 0, {0, -1}},
        {"x/(y+1)", 1, {0, -1}},   {"x^2/(y+1)", 2, {0, -1}},     {"1/(x^2(y+1)^2)", -2, {0, -2}},
        {"1/(x(y+1)^2)", -1, {0, -2}}, {"1/(y+1)^2", 0, {0, -2}},   {"x/(y+1)^2", 1, {0, -2}},
        {"x^2/(y+1)^2", 2, {0, -2}}, {"1/(y+1)^3", 0, {0, -3}},     {"x/(y+1)^3", 1, {0, -3}},
        {"x^2/(y+1)^3", 2, {0, -3}}};
    const auto points = C.affine_points();
    LinearCode cg = build_code(C, points, G);
    LinearCode ch = build_code(C, points, H);
    rep.check(tag + ".dim_C(D,G)", cg.k == 14, std::to_string(cg.k));
    rep.check(tag + ".dim_C(D,H)", ch.k == 16, std::to_string(ch.k));
    spanning_checks(rep, tag + ".G", C, g_funcs, G, cg, points);
    spanning_checks(rep, tag + ".H", C, h_funcs, H, ch, points);
    rep.check(tag + ".dual_partner", dual_partner_divisor(C, G) == H, C.divisor_to_string(dual_partner_divisor(C, G)));
    rep.check(tag + ".duality", orthogonal(cg, ch) && same_code(dual(cg), ch));
    Matrix stacked = cg.generator;
    for (std::size_t i = 0; i < ch.k; ++i) stacked.append_row(ch.generator.row(i));
    const std::size_t sum_dim = linalg::rank(C.F(), stacked);
    rep.check(tag + ".direct_sum_is_full_space", sum_dim == 30, "dim C(D,G)+C(D,H) = " + std::to_string(sum_dim));
    auto thm = verify_hull_theorem(C, points, G, H);
    rep.check(tag + ".gcd", thm.gcdGH == C.parse_divisor("2*P1-1*P2"), C.divisor_to_string(thm.gcdGH));
    rep.check(tag + ".hull_trivial", thm.hull_dim == 0 && thm.conclusions_hold(),
              "hull dim " + std::to_string(thm.hull_dim));
    rep.results[tag] = {{"G", C.divisor_to_string(G)}, {"H", C.divisor_to_string(H)}, {"k_G", cg.k},
                        {"k_H", ch.k},  {"n", cg.n},  {"hull_dim", thm.hull_dim}};
}

void lcd_instance(RunReport& rep, const std::string& tag, const LcdInstance& inst, std::size_t expected_n) {
    const auto& C = inst.curve;
    auto lc = lcd_construct_maxcur(C, inst.G);
    const auto& cert = lc.certificate;
    rep.check(tag + ".certificate", cert.all_pass(),
              "family " + cert.family + ", gcd " + C.divisor_to_string(cert.gcdGH));
    const std::size_t k = lc.code ? lc.code->k : 0;
    const std::size_t n = lc.code ? lc.code->n : 0;
    rep.check(tag + ".dimension", static_cast<int>(k) == inst.expected_dimension,
              std::to_string(k) + " (expected " + std::to_string(inst.expected_dimension) + ")");
    if (expected_n) rep.check(tag + ".length", n == expected_n, std::to_string(n));
    rep.results[tag] = {{"curve", C.label()}, {"G", C.divisor_to_string(cert.G)}, {"H", C.divisor_to_string(cert.H)},
                        {"gcd", C.divisor_to_string(cert.gcdGH)}, {"n", n}, {"k", k}, {"hull_dim", cert.hull_dim},
                        {"lcd", cert.all_pass()}};
}

}  // namespace

const std::vector<std::string>& reference_example_names() {
    static const std::vector<std::string> names{"hermitian-q2", "gf16-quintic", "trace-quotient", "hermitian-extension", "hermitian"};
    return names;
}

void verify_reference_example(const std::string& which, RunReport& rep, unsigned jobs) {
    if (which == "hermitian-q2") {
        hermitian_q2(rep, jobs);
    } else if (which == "gf16-quintic") {
        quintic_gf16(rep);
    } else if (which == "trace-quotient") {
        lcd_instance(rep, "trace-quotient-q4", trace_quotient_lcd(4), 30);
    } else if (which == "hermitian-extension") {
        lcd_instance(rep, "hermitian-extension-q2-r3", hermitian_extension_lcd(2, 3), 126);
    } else if (which == "hermitian") {
        for (int q : {2, 3, 4})
            for (bool at_inf : {false, true})
                lcd_instance(rep, "hermitian-q" + std::to_string(q) + (at_inf ? "-inf" : "-ramified"),
                             hermitian_lcd(q, at_inf), static_cast<std::size_t>(q * q - 1) * q);
    } else {
        throw ParseError("unknown example '" + which + "'");
    }
}

}  // namespace kummer_lcd::cli
