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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummer_lcd/curve.hpp"
#include "kummer_lcd/function_space.hpp"
#include "kummer_lcd/linear_algebra.hpp"

namespace kummer_lcd {

class CodeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CodeProvenance {
    std::string curve_label;
    Divisor D;
    Divisor G;
};

/// Linear code with generator in reduced row-echelon form.
struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;
    std::vector<Place> column_labels;
    std::optional<CodeProvenance> provenance;
};

/// Row-reduces `generator` and drops dependent rows.
LinearCode make_code(FieldPtr field, const Matrix& generator, std::vector<Place> labels = {});

/// Rows f_i evaluated at the points, in the given order.
Matrix evaluation_matrix(const KummerCurve& C, std::span<const FunctionElement> functions,
                         std::span<const Place> points);

/// C(D, G) with D = sum of `points` (distinct affine places) in that order.
LinearCode build_code(const KummerCurve& C, std::span<const Place> points, const Divisor& G);
/// C(D, G) with columns in rational_points order.
LinearCode build_code(const KummerCurve& C, const Divisor& D, const Divisor& G);

LinearCode dual(const LinearCode& code);
/// C intersect C-perp, from the kernel of the stacked generators.
LinearCode hull(const LinearCode& code);
/// k - rank(G G^T); independent of `hull`.
std::size_t hull_dimension_by_projection(const LinearCode& code);
bool is_lcd(const LinearCode& code);
bool is_self_orthogonal(const LinearCode& code);
bool same_code(const LinearCode& a, const LinearCode& b);
/// Every row of a is orthogonal to every row of b.
bool orthogonal(const LinearCode& a, const LinearCode& b);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct HullTheoremReport {
    Divisor gcdGH;
    int ell_gcd = 0;
    std::size_t hull_dim = 0;
    std::vector<Check> hypotheses;
    std::vector<Check> conclusions;
    bool hypotheses_hold() const;
    bool conclusions_hold() const;
};

/// Checks Hull(C(D,G)) = C(D, gcd(G,H)) numerically. Throws CodeError when
/// C(D,H) is not the dual of C(D,G).
HullTheoremReport verify_hull_theorem(const KummerCurve& C, std::span<const Place> points, const Divisor& G,
                                      const Divisor& H);

enum class CurveFamily { MaximalKummer, RemarkFamily, Unsupported };

struct FamilyCheck {
    CurveFamily family = CurveFamily::Unsupported;
    int Q = 0;  // sqrt of the field order when it is a square
    std::string detail;
    std::string name() const;
};

/// Whether the curve is F(y) = x^{Q+1} over GF(Q^2) with F separable
/// linearized of degree 1 < r <= Q and Q^2 r + 1 rational points, or lies
/// in the wider range Q+1 <= m <= Q^2/2 - gcd(2,Q) + 1.
FamilyCheck classify_family(const KummerCurve& C);

/// H = (2g + r - 2) Pinf + sum_i (Q^2 - 2) P_i - G.
Divisor dual_partner_divisor(const KummerCurve& C, const Divisor& G, bool allow_remark_family = false);

struct LcdCertificate {
    Divisor G;
    Divisor H;
    Divisor gcdGH;
    std::string family;
    std::size_t hull_dim = 0;
    struct Checks {
        bool degree_window = false;
        bool gcd_degree_is_g_minus_1 = false;
        bool gcd_nonspecial = false;
        bool duality_verified = false;
        bool hull_trivial = false;
    } checks;
    bool all_pass() const {
        return checks.degree_window && checks.gcd_degree_is_g_minus_1 && checks.gcd_nonspecial &&
               checks.duality_verified && checks.hull_trivial;
    }
};

struct LcdConstruction {
    std::optional<LinearCode> code;     // C(D, G), D = standard_D
    std::optional<LinearCode> partner;  // C(D, H)
    LcdCertificate certificate;
};

LcdConstruction lcd_construct_maxcur(const KummerCurve& C, const Divisor& G, bool allow_remark_family = false);

struct MinDistanceResult {
    std::optional<int> distance;        // exact, when enumerated
    std::optional<int> designed_bound;  // n - deg G, when provenance exists
    bool budget_exceeded = false;
    std::uint64_t codewords = 0;  // q^k
};

/// Exact minimum distance by enumerating messages when q^k <= budget.
MinDistanceResult min_distance(const LinearCode& code, std::uint64_t budget = std::uint64_t{1} << 24,
                               unsigned jobs = 1);

/// Hull dimension of C(standard_D, alpha * Pinf).
std::size_t one_point_hull_probe(const KummerCurve& C, int alpha);

}  // namespace kummer_lcd
