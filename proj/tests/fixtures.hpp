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

// Curves shared by several test binaries.

#pragma once

#include "kummer_lcd/curve.hpp"
#include "kummer_lcd/families.hpp"
#include "kummer_lcd/finite_field.hpp"

namespace fixture {

using namespace kummer_lcd;

/// y^2 + y = x^m over GF(2^k).
inline KummerCurve artin_schreier(int k, int m) {
    auto F = GaloisField::make(2, k);
    return curve_from_polynomial(F, linearized(*F, {2, 1}), m, "y2y-x" + std::to_string(m));
}

inline KummerCurve quintic16() { return artin_schreier(4, 5); }
inline KummerCurve nonic64() { return artin_schreier(6, 9); }

/// First `r` field elements (in enumeration order) as roots, exponent m.
inline KummerCurve first_roots(int p, int k, int r, int m) {
    auto F = GaloisField::make(p, k);
    std::vector<Elem> al(F->elements().begin(), F->elements().begin() + r);
    return make_curve(F, al, m, "first-roots");
}

}  // namespace fixture
