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
#include <utility>
#include <vector>

#include "kummer_lcd/curve.hpp"

namespace kummer_lcd {

/// (p, k) with q = p^k; throws CurveError when q is not a prime power.
std::pair<int, int> prime_power(int q);

/// Curve F(y) = x^m whose roots alpha_i are the roots of F lying in the
/// field, in field enumeration order.
KummerCurve curve_from_polynomial(FieldPtr field, const Poly& F, int m, std::string label);

/// y^{p^{e_1}} + y^{p^{e_2}} + ... as a dense polynomial.
Poly linearized(const GaloisField& field, const std::vector<int>& powers);

/// y^q + y = x^{q+1} over GF(q^2).
KummerCurve hermitian_curve(int q);
/// y^{q/2} + y^{q/4} + ... + y = x^{q+1} over GF(q^2), 4 | q.
KummerCurve trace_quotient_curve(int q);
/// y^q + y = x^{q^r+1} over GF(q^{2r}), r odd.
KummerCurve hermitian_extension_curve(int q, int r);
/// y^{q^{r-1}} + ... + y = x^{(q^r-1)/(q-1)} over GF(q^r).
KummerCurve norm_trace_curve(int q, int r);

/// A curve together with an evaluation divisor G expected to give an LCD
/// code C(standard_D, G) of dimension `expected_dimension`.
struct LcdInstance {
    KummerCurve curve;
    Divisor G;
    int expected_dimension = 0;
};

/// Trace-quotient curve, G = (q^2-1) P_{q/2} + sum_{j<q/2} 2j P_j.
LcdInstance trace_quotient_lcd(int q);
/// Hermitian extension curve, G = (q^r+1)(q-1) Pinf + sum_{j<q} q^{r-1} j P_j.
LcdInstance hermitian_extension_lcd(int q, int r);
/// Hermitian curve, G = sum_{j<q} j P_j + (q^2-1) P_q, or with the last
/// term at infinity when `at_infinity`.
LcdInstance hermitian_lcd(int q, bool at_infinity);

}  // namespace kummer_lcd
