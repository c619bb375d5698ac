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

#include "kummer_lcd/families.hpp"

namespace kummer_lcd {

namespace {

long long ipow(long long b, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
    if (q < 2) throw CurveError("q must be a prime power >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw CurveError(std::to_string(q) + " is not a prime power");
    return {p, k};
}

Poly linearized(const GaloisField& field, const std::vector<int>& powers) {
    Poly f;
    for (int e : powers) f = poly::add(field, f, poly::monomial(field, e));
    return f;
}

KummerCurve curve_from_polynomial(FieldPtr field, const Poly& F, int m, std::string label) {
    auto roots = solve_additive(*field, F, field->zero());
    if (static_cast<int>(roots.size()) != poly::degree(F))
        throw CurveError("defining polynomial does not split into distinct linear factors over the field");
    return KummerCurve(std::move(field), std::move(roots), m, std::move(label));
}

KummerCurve hermitian_curve(int q) {
    auto [p, k] = prime_power(q);
    auto field = GaloisField::make(p, 2 * k);
    Poly F = linearized(*field, {q, 1});
    return curve_from_polynomial(field, F, q + 1, "hermitian-q" + std::to_string(q));
}

KummerCurve trace_quotient_curve(int q) {
    if (q % 4 != 0) throw CurveError("trace quotient curve needs 4 | q");
    auto [p, k] = prime_power(q);
    if (p != 2) throw CurveError("trace quotient curve needs q a power of 2");
    auto field = GaloisField::make(p, 2 * k);
    std::vector<int> powers;
    for (int e = q / 2; e >= 1; e /= 2) powers.push_back(e);
    Poly F = linearized(*field, powers);
    return curve_from_polynomial(field, F, q + 1, "trace-quotient-q" + std::to_string(q));
}

KummerCurve hermitian_extension_curve(int q, int r) {
    if (r < 1 || r % 2 == 0) throw CurveError("r must be odd");
    auto [p, k] = prime_power(q);
    auto field = GaloisField::make(p, 2 * k * r);
    Poly F = linearized(*field, {q, 1});
    const long long m = ipow(q, r) + 1;
    return curve_from_polynomial(field, F, static_cast<int>(m),
                                 "hermitian-ext-q" + std::to_string(q) + "-r" + std::to_string(r));
}

KummerCurve norm_trace_curve(int q, int r) {
    if (r < 2) throw CurveError("norm-trace curve needs r >= 2");
    auto [p, k] = prime_power(q);
    auto field = GaloisField::make(p, k * r);
    std::vector<int> powers;
    for (int e = r - 1; e >= 0; --e) powers.push_back(static_cast<int>(ipow(q, e)));
    Poly F = linearized(*field, powers);
    const long long m = (ipow(q, r) - 1) / (q - 1);
    return curve_from_polynomial(field, F, static_cast<int>(m),
                                 "norm-trace-q" + std::to_string(q) + "-r" + std::to_string(r));
}

LcdInstance trace_quotient_lcd(int q) {
    KummerCurve C = trace_quotient_curve(q);
    Divisor G;
    G.set(Place::ramified(q / 2), q * q - 1);
    for (int j = 1; j <= (q - 2) / 2; ++j) G.set(Place::ramified(j), 2 * j);
    return {std::move(C), std::move(G), q * q};
}

LcdInstance hermitian_extension_lcd(int q, int r) {
    KummerCurve C = hermitian_extension_curve(q, r);
    const int top = static_cast<int>((ipow(q, r) + 1) * (q - 1));
    Divisor G;
    G.set(Place::infinity(), top);
    for (int j = 1; j <= q - 1; ++j) G.set(Place::ramified(j), static_cast<int>(ipow(q, r - 1)) * j);
    return {std::move(C), std::move(G), top + 1};
}

LcdInstance hermitian_lcd(int q, bool at_infinity) {
    KummerCurve C = hermitian_curve(q);
    Divisor G;
    for (int j = 1; j <= q - 1; ++j) G.set(Place::ramified(j), j);
    G.set(at_infinity ? Place::infinity() : Place::ramified(q), q * q - 1);
    return {std::move(C), std::move(G), q * q};
}

}  // namespace kummer_lcd
