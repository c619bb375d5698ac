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

// Brute-force reference computations shared by the tests. None of these
// call into the code paths they are used to check.

#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "kummer_lcd/ag_code.hpp"
#include "kummer_lcd/curve.hpp"
#include "kummer_lcd/finite_field.hpp"
#include "kummer_lcd/linear_algebra.hpp"

namespace oracle {

using namespace kummer_lcd;

/// Schoolbook product of coefficient vectors reduced by the modulus.
inline Elem mul(const GaloisField& F, Elem x, Elem y) {
    const int p = F.characteristic(), k = F.degree();
    const auto& mod = F.spec().modulus;  // k+1 coefficients, monic
    auto a = F.coeffs(x), b = F.coeffs(y);
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
        int c = prod[d];
        if (!c) continue;
        for (int i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(k);
    return F.from_coeffs(prod);
}

inline Elem add(const GaloisField& F, Elem x, Elem y) {
    auto a = F.coeffs(x), b = F.coeffs(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % F.characteristic();
    return F.from_coeffs(a);
}

inline Elem pow(const GaloisField& F, Elem x, long long e) {
    Elem r = F.one();
    for (long long i = 0; i < e; ++i) r = mul(F, r, x);
    return r;
}

/// prod_i (b - alpha_i) - a^m evaluated with schoolbook arithmetic.
inline bool on_curve(const KummerCurve& C, Elem a, Elem b) {
    const auto& F = C.F();
    Elem lhs = F.one();
    for (auto al : C.alphas()) {
        auto bc = F.coeffs(b), ac = F.coeffs(al);
        for (std::size_t i = 0; i < bc.size(); ++i) bc[i] = ((bc[i] - ac[i]) % F.characteristic() + F.characteristic()) % F.characteristic();
        lhs = mul(F, lhs, F.from_coeffs(bc));
    }
    return lhs == pow(F, a, C.m());
}

/// Affine solutions (a, b) with a != 0, by scanning the whole plane.
inline std::size_t affine_point_count(const KummerCurve& C) {
    std::size_t n = 0;
    const auto& els = C.F().elements();
    for (auto a : els) {
        if (a.packed == 0) continue;
        for (auto b : els) n += on_curve(C, a, b);
    }
    return n;
}

/// a^t * prod_i (b - alpha_i)^{e_i} at an affine point (b != alpha_i).
inline Elem eval_monomial(const KummerCurve& C, int t, const std::vector<int>& e, const Place& P) {
    const auto& F = C.F();
    Elem v = F.pow(P.a, t);
    for (int i = 0; i < C.r(); ++i) v = F.mul(v, F.pow(F.sub(P.b, C.alphas()[i]), e[i]));
    return v;
}

/// Exponent vectors (t, e) of monomials x^t prod (y - alpha_i)^{e_i},
/// 0 <= t < m, whose principal divisor is >= -G at ramified places and
/// infinity. Such monomials span L(G) for G supported there.
inline std::vector<std::pair<int, std::vector<int>>> monomials_in(const KummerCurve& C, const Divisor& G) {
    const int r = C.r(), m = C.m();
    std::vector<std::pair<int, std::vector<int>>> out;
    for (int t = 0; t < m; ++t) {
        std::vector<int> lo(r);
        int lo_sum = 0;
        for (int i = 0; i < r; ++i) {
            // t + m e_i >= -G_i
            const int need = -G.coefficient(Place::ramified(i + 1)) - t;
            lo[i] = need >= 0 ? (need + m - 1) / m : -((-need) / m);
            lo_sum += lo[i];
        }
        // -r t - m sum e >= -G_inf
        const int num = G.coefficient(Place::infinity()) - r * t;
        const int hi_sum = num >= 0 ? num / m : -((-num + m - 1) / m);
        if (lo_sum > hi_sum) continue;
        std::vector<int> e = lo;
        std::function<void(int, int)> rec = [&](int i, int slack) {
            if (i == r) {
                out.emplace_back(t, e);
                return;
            }
            for (int d = 0; d <= slack; ++d) {
                e[i] = lo[i] + d;
                rec(i + 1, slack - d);
            }
            e[i] = lo[i];
        };
        rec(0, hi_sum - lo_sum);
    }
    return out;
}

/// dim L(G) for G supported on ramified places and infinity plus -1
/// coefficients at affine places, via the rank of monomial evaluations at the
/// remaining affine points. Requires deg G (ignoring the affine part) < n.
inline int ell(const KummerCurve& C, const Divisor& G) {
    Divisor Gs;
    std::vector<Place> zeros;
    for (const auto& [P, c] : G.terms()) {
        if (P.is_affine())
            zeros.push_back(P);
        else
            Gs.set(P, c);
    }
    const auto& F = C.F();
    auto mons = monomials_in(C, Gs);
    std::vector<Place> pts(C.affine_points().begin(), C.affine_points().end());
    if (Gs.degree() >= static_cast<int>(pts.size())) throw std::invalid_argument("oracle needs deg G < n");
    Matrix M(0, pts.size());
    for (const auto& [t, e] : mons) {
        std::vector<Elem> row;
        for (const auto& P : pts) row.push_back(eval_monomial(C, t, e, P));
        M.append_row(row);
    }
    if (M.rows() == 0) return 0;
    // L(G - sum Z) = kernel of evaluation at the zero places.
    Matrix B = linalg::rref(F, M);
    if (zeros.empty()) return static_cast<int>(B.rows());
    std::vector<std::size_t> zcols;
    for (const auto& Z : zeros)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (pts[j] == Z) zcols.push_back(j);
    Matrix Z(B.rows(), zcols.size());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < zcols.size(); ++j) Z(i, j) = B(i, zcols[j]);
    return static_cast<int>(B.rows() - linalg::rank(F, Z));
}

/// All q^k codewords (message order: base-q digits over field enumeration).
inline std::vector<std::vector<Elem>> codewords(const LinearCode& code) {
    const auto& F = *code.field;
    const auto& els = F.elements();
    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t> digit(code.k, 0);
    while (true) {
        std::vector<Elem> c(code.n, F.zero());
        for (std::size_t i = 0; i < code.k; ++i)
            for (std::size_t j = 0; j < code.n; ++j)
                c[j] = add(F, c[j], mul(F, els[digit[i]], code.generator(i, j)));
        out.push_back(std::move(c));
        std::size_t pos = 0;
        while (pos < code.k && ++digit[pos] == els.size()) digit[pos++] = 0;
        if (pos == code.k) break;
    }
    return out;
}

inline int min_distance(const LinearCode& code) {
    int best = static_cast<int>(code.n) + 1;
    for (const auto& c : codewords(code)) {
        int w = 0;
        for (auto e : c) w += e.packed != 0;
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

inline Elem dot(const GaloisField& F, const std::vector<Elem>& a, std::span<const Elem> b) {
    Elem s = F.zero();
    for (std::size_t j = 0; j < a.size(); ++j) s = add(F, s, mul(F, a[j], b[j]));
    return s;
}

/// log_q of the number of codewords orthogonal to every generator row.
inline int hull_dimension(const LinearCode& code) {
    const auto& F = *code.field;
    std::size_t count = 0;
    for (const auto& c : codewords(code)) {
        bool orth = true;
        for (std::size_t i = 0; i < code.k && orth; ++i) orth = dot(F, c, code.generator.row(i)).packed == 0;
        count += orth;
    }
    int d = 0;
    while (count > 1) {
        count /= F.order();
        ++d;
    }
    return d;
}

/// Random divisor on ramified places and infinity with coefficients in [lo, hi].
inline Divisor random_divisor(const KummerCurve& C, std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Divisor G;
    G.set(Place::infinity(), d(rng));
    for (int i = 1; i <= C.r(); ++i) G.set(Place::ramified(i), d(rng));
    return G;
}

}  // namespace oracle
