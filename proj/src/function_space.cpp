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

#include "kummer_lcd/function_space.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "kummer_lcd/linear_algebra.hpp"

namespace kummer_lcd {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctionElement

void FunctionElement::put(const KummerCurve& C, int t, Term term) {
    const auto& F = C.F();
    if (!term.num.empty()) {
        for (int i = 0; i < C.r(); ++i) {
            int& d = term.den[static_cast<std::size_t>(i)];
            if (d == 0) continue;
            int k = std::min(d, poly::root_order(F, term.num, C.alphas()[static_cast<std::size_t>(i)]));
            if (k > 0) {
                term.num = poly::divide_linear(F, term.num, C.alphas()[static_cast<std::size_t>(i)], k);
                d -= k;
            }
        }
    }
    if (term.num.empty())
        terms_.erase(t);
    else
        terms_[t] = std::move(term);
}

FunctionElement FunctionElement::constant(const KummerCurve& C, Elem c) {
    FunctionElement f;
    f.put(C, 0, Term{poly::constant(C.F(), c), std::vector<int>(static_cast<std::size_t>(C.r()), 0)});
    return f;
}

FunctionElement FunctionElement::monomial(const KummerCurve& C, int t, std::span<const int> exponents) {
    if (static_cast<int>(exponents.size()) != C.r())
        throw FunctionSpaceError("monomial needs one exponent per root alpha_i");
    const int wraps = floor_div(t, C.m());
    const int t0 = t - wraps * C.m();
    Term term{Poly{C.F().one()}, std::vector<int>(static_cast<std::size_t>(C.r()), 0)};
    for (int i = 0; i < C.r(); ++i) {
        int e = exponents[static_cast<std::size_t>(i)] + wraps;
        if (e > 0)
            term.num = poly::mul(C.F(), term.num, poly::pow_linear(C.F(), C.alphas()[static_cast<std::size_t>(i)], e));
        else
            term.den[static_cast<std::size_t>(i)] = -e;
    }
    FunctionElement f;
    f.put(C, t0, std::move(term));
    return f;
}

FunctionElement FunctionElement::term(const KummerCurve& C, int t, Poly num, std::vector<int> den) {
    if (t < 0 || t >= C.m()) throw FunctionSpaceError("x exponent must lie in [0, m)");
    if (static_cast<int>(den.size()) != C.r()) throw FunctionSpaceError("need one denominator exponent per alpha_i");
    for (int d : den)
        if (d < 0) throw FunctionSpaceError("denominator exponents must be nonnegative");
    poly::normalize(num);
    FunctionElement f;
    f.put(C, t, Term{std::move(num), std::move(den)});
    return f;
}

namespace {

using Term = FunctionElement::Term;

Term combine(const KummerCurve& C, const Term& u, const Term& v, bool subtract) {
    const auto& F = C.F();
    Term out{{}, std::vector<int>(static_cast<std::size_t>(C.r()), 0)};
    Poly nu = u.num, nv = v.num;
    for (std::size_t i = 0; i < out.den.size(); ++i) {
        int d = std::max(u.den[i], v.den[i]);
        out.den[i] = d;
        if (d > u.den[i]) nu = poly::mul(F, nu, poly::pow_linear(F, C.alphas()[i], d - u.den[i]));
        if (d > v.den[i]) nv = poly::mul(F, nv, poly::pow_linear(F, C.alphas()[i], d - v.den[i]));
    }
    out.num = subtract ? poly::sub(F, nu, nv) : poly::add(F, nu, nv);
    return out;
}

}  // namespace

FunctionElement FunctionElement::add(const KummerCurve& C, const FunctionElement& g) const {
    FunctionElement out = *this;
    for (const auto& [t, term] : g.terms_) {
        auto it = out.terms_.find(t);
        if (it == out.terms_.end())
            out.terms_[t] = term;
        else
            out.put(C, t, combine(C, it->second, term, false));
    }
    return out;
}

FunctionElement FunctionElement::sub(const KummerCurve& C, const FunctionElement& g) const {
    return add(C, g.scale(C, C.F().neg(C.F().one())));
}

FunctionElement FunctionElement::scale(const KummerCurve& C, Elem c) const {
    FunctionElement out;
    if (c.packed == 0) return out;
    for (const auto& [t, term] : terms_) out.terms_[t] = Term{poly::scale(C.F(), term.num, c), term.den};
    return out;
}

FunctionElement FunctionElement::mul(const KummerCurve& C, const FunctionElement& g) const {
    const auto& F = C.F();
    FunctionElement out;
    for (const auto& [s, u] : terms_) {
        for (const auto& [t, v] : g.terms_) {
            Term w{poly::mul(F, u.num, v.num), std::vector<int>(static_cast<std::size_t>(C.r()), 0)};
            for (std::size_t i = 0; i < w.den.size(); ++i) w.den[i] = u.den[i] + v.den[i];
            int e = s + t;
            if (e >= C.m()) {
                e -= C.m();
                w.num = poly::mul(F, w.num, C.defining_poly());
            }
            FunctionElement piece;
            piece.put(C, e, std::move(w));
            out = out.add(C, piece);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Valuations and evaluation

Valuation valuation(const KummerCurve& C, const FunctionElement& f, const Place& P) {
    if (f.is_zero()) throw FunctionSpaceError("valuation of the zero function");
    if (!C.is_rational_place(P)) throw FunctionSpaceError("not a rational place of this curve");
    const auto& F = C.F();
    switch (P.kind) {
        case Place::Kind::Ramified: {
            const Elem alpha = C.alpha(P.index);
            const auto i = static_cast<std::size_t>(P.index - 1);
            int best = std::numeric_limits<int>::max();
            for (const auto& [t, term] : f.terms())
                best = std::min(best, t + C.m() * (poly::root_order(F, term.num, alpha) - term.den[i]));
            return {best, false};
        }
        case Place::Kind::Infinity: {
            int best = std::numeric_limits<int>::max();
            for (const auto& [t, term] : f.terms()) {
                int pole = poly::degree(term.num) - std::accumulate(term.den.begin(), term.den.end(), 0);
                best = std::min(best, -C.r() * t - C.m() * pole);
            }
            return {best, false};
        }
        case Place::Kind::Affine:
            if (evaluate(C, f, P).packed == 0) return {1, true};
            return {0, false};
    }
    return {};
}

Elem evaluate(const KummerCurve& C, const FunctionElement& f, const Place& P) {
    if (!P.is_affine()) throw FunctionSpaceError("evaluation is only defined at affine places");
    const auto& F = C.F();
    Elem acc = F.zero();
    for (const auto& [t, term] : f.terms()) {
        Elem den = F.one();
        for (std::size_t i = 0; i < term.den.size(); ++i) {
            if (term.den[i] == 0) continue;
            Elem diff = F.sub(P.b, C.alphas()[i]);
            if (diff.packed == 0) throw FunctionSpaceError("denominator vanishes at the evaluation point");
            den = F.mul(den, F.pow(diff, term.den[i]));
        }
        Elem v = F.mul(F.pow(P.a, t), poly::eval(F, term.num, P.b));
        acc = F.add(acc, F.div(v, den));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Riemann-Roch spaces

namespace {

struct SplitDivisor {
    std::vector<int> ramified;  // coefficient at Ramified(i+1)
    int infinity = 0;
    std::vector<Place> zero_constraints;  // affine places with coefficient -1
};

SplitDivisor split(const KummerCurve& C, const Divisor& G) {
    SplitDivisor s;
    s.ramified.assign(static_cast<std::size_t>(C.r()), 0);
    for (const auto& [P, c] : G.terms()) {
        if (!C.is_rational_place(P))
            throw FunctionSpaceError("divisor contains a place that is not rational on this curve: " +
                                     C.place_to_string(P));
        switch (P.kind) {
            case Place::Kind::Ramified:
                s.ramified[static_cast<std::size_t>(P.index - 1)] = c;
                break;
            case Place::Kind::Infinity:
                s.infinity = c;
                break;
            case Place::Kind::Affine:
                if (c > 0)
                    throw FunctionSpaceError("unsupported positive coefficient at affine place " +
                                             C.place_to_string(P));
                if (c < -1)
                    throw FunctionSpaceError("affine coefficient below -1 at " + C.place_to_string(P));
                s.zero_constraints.push_back(P);
                break;
        }
    }
    return s;
}

// Per x-exponent t: L(G) contains x^t y^k / prod (y - alpha_i)^{n_i} for
// 0 <= k <= sum n_i + e.
struct Slice {
    std::vector<int> n;
    int top = -1;
};

Slice slice(const KummerCurve& C, const SplitDivisor& s, int t) {
    Slice sl;
    sl.n.resize(s.ramified.size());
    int total = 0;
    for (std::size_t i = 0; i < s.ramified.size(); ++i) {
        sl.n[i] = floor_div(s.ramified[i] + t, C.m());
        total += sl.n[i];
    }
    const int e = floor_div(s.infinity - C.r() * t, C.m());
    sl.top = std::max(-1, total + e);
    return sl;
}

int unconstrained_dimension(const KummerCurve& C, const SplitDivisor& s) {
    int dim = 0;
    for (int t = 0; t < C.m(); ++t) dim += slice(C, s, t).top + 1;
    return dim;
}

void self_check(const KummerCurve& C, const Divisor& G, int dim) {
    const int g = C.genus();
    if (G.degree() > 2 * g - 2 && dim != G.degree() + 1 - g)
        throw std::logic_error("Riemann-Roch self-check failed for " + C.divisor_to_string(G) + ": dimension " +
                               std::to_string(dim) + ", expected " + std::to_string(G.degree() + 1 - g));
    if (G.degree() < 0 && dim != 0)
        throw std::logic_error("negative-degree divisor with nonzero space: " + C.divisor_to_string(G));
}

}  // namespace

RRBasis riemann_roch_basis(const KummerCurve& C, const Divisor& G) {
    const auto& F = C.F();
    const SplitDivisor s = split(C, G);
    RRBasis basis;
    basis.divisor = G;
    for (int t = 0; t < C.m(); ++t) {
        const Slice sl = slice(C, s, t);
        if (sl.top < 0) continue;
        Poly base{F.one()};
        std::vector<int> den(s.ramified.size(), 0);
        for (std::size_t i = 0; i < sl.n.size(); ++i) {
            if (sl.n[i] < 0)
                base = poly::mul(F, base, poly::pow_linear(F, C.alphas()[i], -sl.n[i]));
            else
                den[i] = sl.n[i];
        }
        for (int k = 0; k <= sl.top; ++k)
            basis.functions.push_back(FunctionElement::term(C, t, poly::mul(F, poly::monomial(F, k), base), den));
    }

    if (!s.zero_constraints.empty() && !basis.functions.empty()) {
        // Kernel of f -> (f(P))_P over the constraint points.
        Matrix values(basis.functions.size(), s.zero_constraints.size());
        for (std::size_t j = 0; j < basis.functions.size(); ++j)
            for (std::size_t c = 0; c < s.zero_constraints.size(); ++c)
                values(j, c) = evaluate(C, basis.functions[j], s.zero_constraints[c]);
        Matrix kernel = linalg::left_nullspace(F, values);
        std::vector<FunctionElement> reduced;
        for (std::size_t row = 0; row < kernel.rows(); ++row) {
            FunctionElement f;
            for (std::size_t j = 0; j < basis.functions.size(); ++j) {
                Elem c = kernel(row, j);
                if (c.packed != 0) f = f.add(C, basis.functions[j].scale(C, c));
            }
            reduced.push_back(std::move(f));
        }
        basis.functions = std::move(reduced);
    }
    basis.dimension = static_cast<int>(basis.functions.size());
    self_check(C, G, basis.dimension);
    return basis;
}

int ell(const KummerCurve& C, const Divisor& G) {
    const SplitDivisor s = split(C, G);
    if (!s.zero_constraints.empty()) return riemann_roch_basis(C, G).dimension;
    const int dim = unconstrained_dimension(C, s);
    self_check(C, G, dim);
    return dim;
}

int index_of_specialty(const KummerCurve& C, const Divisor& G) {
    return ell(C, G) - (G.degree() + 1 - C.genus());
}

bool is_nonspecial(const KummerCurve& C, const Divisor& G) { return index_of_specialty(C, G) == 0; }

// ---------------------------------------------------------------------------
// Text form

std::string function_to_string(const KummerCurve& C, const FunctionElement& f) {
    if (f.is_zero()) return "0";
    const auto& F = C.F();
    std::string out;
    for (const auto& [t, term] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += "x^" + std::to_string(t) + "*(";
        bool first = true;
        for (std::size_t k = 0; k < term.num.size(); ++k) {
            if (term.num[k].packed == 0) continue;
            if (!first) out += '+';
            out += F.to_string(term.num[k]) + "*y^" + std::to_string(k);
            first = false;
        }
        out += ')';
        std::string den;
        for (std::size_t i = 0; i < term.den.size(); ++i) {
            if (term.den[i] == 0) continue;
            if (!den.empty()) den += '*';
            den += "(y-" + F.to_string(C.alphas()[i]) + ")^" + std::to_string(term.den[i]);
        }
        if (!den.empty()) out += "/(" + den + ")";
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Split at `sep` occurring outside () and [].
std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(strip(s.substr(start)));
    return parts;
}

int to_int(std::string_view s, std::string_view context) {
    s = strip(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed integer in '" + std::string(context) + "'");
    return v;
}

std::string_view unwrap(std::string_view s, std::string_view context) {
    s = strip(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected parenthesised group in '" + std::string(context) + "'");
    return s.substr(1, s.size() - 2);
}

}  // namespace

FunctionElement parse_function(const KummerCurve& C, std::string_view text) {
    const auto& F = C.F();
    auto s = strip(text);
    if (s == "0") return {};
    FunctionElement f;
    for (auto part : split_top(s, '+')) {
        if (part.size() < 3 || part.substr(0, 2) != "x^")
            throw ParseError("term must start with x^t: '" + std::string(part) + "'");
        auto star = part.find('*');
        if (star == std::string_view::npos) throw ParseError("missing '*' in '" + std::string(part) + "'");
        const int t = to_int(part.substr(2, star - 2), part);
        auto rest = part.substr(star + 1);
        auto pieces = split_top(rest, '/');
        if (pieces.size() > 2) throw ParseError("too many '/' in '" + std::string(part) + "'");

        Poly num;
        for (auto mono : split_top(unwrap(pieces[0], part), '+')) {
            auto ypos = mono.rfind("*y^");
            if (ypos == std::string_view::npos)
                throw ParseError("monomial must read c*y^k: '" + std::string(mono) + "'");
            Elem c = F.parse(mono.substr(0, ypos));
            const int k = to_int(mono.substr(ypos + 3), part);
            if (k < 0) throw ParseError("negative power of y in numerator");
            num = poly::add(F, num, poly::scale(F, poly::monomial(F, k), c));
        }

        std::vector<int> den(static_cast<std::size_t>(C.r()), 0);
        if (pieces.size() == 2) {
            for (auto factor : split_top(unwrap(pieces[1], part), '*')) {
                auto caret = factor.rfind('^');
                if (caret == std::string_view::npos)
                    throw ParseError("factor must read (y-alpha)^d: '" + std::string(factor) + "'");
                auto inner = unwrap(factor.substr(0, caret), part);
                if (inner.size() < 2 || inner.substr(0, 2) != "y-")
                    throw ParseError("factor must read (y-alpha)^d: '" + std::string(factor) + "'");
                Elem alpha = F.parse(inner.substr(2));
                auto it = std::find(C.alphas().begin(), C.alphas().end(), alpha);
                if (it == C.alphas().end())
                    throw ParseError("denominator factor is not y - alpha_i: '" + std::string(factor) + "'");
                den[static_cast<std::size_t>(it - C.alphas().begin())] += to_int(factor.substr(caret + 1), part);
            }
        }
        f = f.add(C, FunctionElement::term(C, t, std::move(num), std::move(den)));
    }
    return f;
}

}  // namespace kummer_lcd
