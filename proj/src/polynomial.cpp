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

#include "kummer_lcd/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer_lcd::poly {

void normalize(Poly& f) {
    while (!f.empty() && f.back().packed == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly constant(const GaloisField&, Elem c) {
    Poly f{c};
    normalize(f);
    return f;
}

Poly monomial(const GaloisField& F, int k) {
    Poly f(static_cast<std::size_t>(k) + 1, F.zero());
    f.back() = F.one();
    return f;
}

Poly linear(const GaloisField& F, Elem alpha) { return Poly{F.neg(alpha), F.one()}; }

Poly add(const GaloisField& F, const Poly& f, const Poly& g) {
    Poly out(std::max(f.size(), g.size()), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = F.add(out[i], g[i]);
    normalize(out);
    return out;
}

Poly sub(const GaloisField& F, const Poly& f, const Poly& g) {
    Poly out(std::max(f.size(), g.size()), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = F.sub(out[i], g[i]);
    normalize(out);
    return out;
}

Poly mul(const GaloisField& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].packed == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
    }
    normalize(out);
    return out;
}

Poly scale(const GaloisField& F, const Poly& f, Elem c) {
    if (c.packed == 0) return {};
    Poly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.mul(f[i], c);
    return out;
}

Poly pow_linear(const GaloisField& F, Elem alpha, int e) {
    Poly out{F.one()};
    const Poly lin = linear(F, alpha);
    for (int i = 0; i < e; ++i) out = mul(F, out, lin);
    return out;
}

namespace {

// Synthetic division by (y - alpha); returns quotient, sets remainder.
Poly divide_once(const GaloisField& F, const Poly& f, Elem alpha, Elem& rem) {
    if (f.empty()) {
        rem = F.zero();
        return {};
    }
    Poly q(f.size() - 1, F.zero());
    Elem acc = F.zero();
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = F.add(F.mul(acc, alpha), f[i]);
        if (i > 0) q[i - 1] = acc;
    }
    rem = acc;
    normalize(q);
    return q;
}

}  // namespace

int root_order(const GaloisField& F, const Poly& f, Elem alpha) {
    if (f.empty()) throw std::invalid_argument("root order of the zero polynomial");
    int order = 0;
    Poly cur = f;
    while (true) {
        Elem rem;
        Poly q = divide_once(F, cur, alpha, rem);
        if (rem.packed != 0) return order;
        ++order;
        cur = std::move(q);
    }
}

Poly divide_linear(const GaloisField& F, const Poly& f, Elem alpha, int e) {
    Poly cur = f;
    for (int i = 0; i < e; ++i) {
        Elem rem;
        cur = divide_once(F, cur, alpha, rem);
        if (rem.packed != 0) throw std::logic_error("divide_linear: not divisible");
    }
    return cur;
}

Elem eval(const GaloisField& F, const Poly& f, Elem y) { return eval_poly(F, f, y); }

}  // namespace kummer_lcd::poly
