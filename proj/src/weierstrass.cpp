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

#include "kummer_lcd/weierstrass.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "kummer_lcd/function_space.hpp"

namespace kummer_lcd {

namespace {

int top_index(int r, int m) { return m - 1 - m / r; }

bool is_gap(const std::vector<int>& gaps, int v) { return std::binary_search(gaps.begin(), gaps.end(), v); }

// Calls emit(parts) for every way of writing `total` as a sum of
// parts.size() nonnegative integers with parts[i] <= caps[i].
void for_each_composition(int total, std::span<const int> caps, std::vector<int>& parts, std::size_t pos,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (pos + 1 == parts.size()) {
        if (total <= caps[pos]) {
            parts[pos] = total;
            emit(parts);
        }
        return;
    }
    for (int v = 0; v <= std::min(total, caps[pos]); ++v) {
        parts[pos] = v;
        for_each_composition(total - v, caps, parts, pos + 1, emit);
    }
}

void check_tuple(const KummerCurve& C, std::span<const int> places, std::span<const int> alpha) {
    if (places.size() != alpha.size()) throw SemigroupError("tuple and vector lengths differ");
    if (places.empty()) throw SemigroupError("empty tuple of places");
    std::set<int> seen;
    for (int i : places) {
        if (i < 1 || i > C.r()) throw SemigroupError("ramified index " + std::to_string(i) + " out of range");
        if (!seen.insert(i).second) throw SemigroupError("places in a tuple must be distinct");
    }
    for (int a : alpha)
        if (a < 0) throw SemigroupError("semigroup vectors have nonnegative entries");
}

}  // namespace

bool entrywise_leq(std::span<const int> v, std::span<const int> w) {
    if (v.size() != w.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > w[i]) return false;
    return true;
}

std::vector<int> gap_set_single(const KummerCurve& C) {
    const int r = C.r(), m = C.m();
    std::vector<int> gaps;
    for (int j = 1; j <= top_index(r, m); ++j)
        for (int k = 0; k <= r - 2 - (r * j) / m; ++k) gaps.push_back(m * k + j);
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    return gaps;
}

std::vector<SemigroupVector> gamma_plus_multi(const KummerCurve& C, int l) {
    const int r = C.r(), m = C.m();
    if (l < 2 || l > r - r / m)
        throw SemigroupError("tuple size " + std::to_string(l) + " outside [2, r - floor(r/m)] = [2, " +
                             std::to_string(r - r / m) + "]");
    std::vector<SemigroupVector> out;
    const std::vector<int> caps(static_cast<std::size_t>(l), r);
    for (int j = 1; j <= top_index(r, m); ++j) {
        const int total = r - l - (r * j) / m;
        if (total < 0) continue;
        std::vector<int> parts(static_cast<std::size_t>(l), 0);
        for_each_composition(total, caps, parts, 0, [&](const std::vector<int>& s) {
            SemigroupVector v(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) v[i] = m * s[i] + j;
            out.push_back(std::move(v));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

GeneratingSet::GeneratingSet(const KummerCurve& C, std::span<const int> box) : box_(box.begin(), box.end()) {
    const int r = C.r(), m = C.m();
    const int l = static_cast<int>(box_.size());
    if (l < 1 || l > r) throw SemigroupError("tuple size must lie in [1, r]");
    if (static_cast<std::uint32_t>(l) >= C.F().order())
        throw SemigroupError("lub description needs fewer places than field elements");
    std::set<SemigroupVector> found;

    // Single places: the whole semigroup H(P) inside the box.
    const auto gaps = gap_set_single(C);
    for (int i = 0; i < l; ++i) {
        for (int v = 0; v <= box_[static_cast<std::size_t>(i)]; ++v) {
            if (is_gap(gaps, v)) continue;
            SemigroupVector g(static_cast<std::size_t>(l), 0);
            g[static_cast<std::size_t>(i)] = v;
            found.insert(std::move(g));
        }
    }

    // Sub-tuples I with |I| >= 2, included into the coordinates of I.
    const int max_size = std::min(l, r - r / m);
    for (int size = 2; size <= max_size; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(l), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> coords;
            for (int i = 0; i < l; ++i)
                if (pick[static_cast<std::size_t>(i)]) coords.push_back(i);
            for (int j = 1; j <= top_index(r, m); ++j) {
                const int total = r - size - (r * j) / m;
                if (total < 0) continue;
                std::vector<int> caps(coords.size());
                bool fits = true;
                for (std::size_t c = 0; c < coords.size(); ++c) {
                    int room = box_[static_cast<std::size_t>(coords[c])] - j;
                    if (room < 0) fits = false;
                    caps[c] = room < 0 ? 0 : room / m;
                }
                if (!fits) continue;
                std::vector<int> parts(coords.size(), 0);
                for_each_composition(total, caps, parts, 0, [&](const std::vector<int>& s) {
                    SemigroupVector g(static_cast<std::size_t>(l), 0);
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        g[static_cast<std::size_t>(coords[c])] = m * s[c] + j;
                    found.insert(std::move(g));
                });
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    elements_.assign(found.begin(), found.end());
}

bool GeneratingSet::generates(std::span<const int> alpha) const {
    if (!entrywise_leq(alpha, box_)) throw SemigroupError("vector lies outside the generating-set box");
    // lub of l generators equals alpha iff every coordinate of alpha is
    // attained by some generator below alpha.
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        bool attained = std::any_of(elements_.begin(), elements_.end(), [&](const SemigroupVector& g) {
            return g[i] == alpha[i] && entrywise_leq(g, alpha);
        });
        if (!attained) return false;
    }
    return true;
}

bool semigroup_membership_oracle(const KummerCurve& C, std::span<const int> places, std::span<const int> alpha) {
    check_tuple(C, places, alpha);
    Divisor A;
    for (std::size_t i = 0; i < places.size(); ++i) A.set(Place::ramified(places[i]), alpha[i]);
    const int base = ell(C, A);
    for (int j : places) {
        Divisor lower = A;
        lower.add(Place::ramified(j), -1);
        if (ell(C, lower) + 1 != base) return false;
    }
    return true;
}

bool lub_closure_membership(const KummerCurve& C, std::span<const int> places, std::span<const int> alpha) {
    check_tuple(C, places, alpha);
    return GeneratingSet(C, alpha).generates(alpha);
}

bool is_nonspecial_gns(const KummerCurve& C, const Divisor& A) {
    if (!A.is_zero() && !A.is_effective()) throw SemigroupError("divisor must be effective");
    if (A.degree() != C.genus()) throw SemigroupError("divisor must have degree g");
    std::vector<int> alpha(static_cast<std::size_t>(C.r()), 0);
    for (const auto& [P, c] : A.terms()) {
        if (!P.is_ramified() || P.index < 1 || P.index > C.r())
            throw SemigroupError("divisor must be supported on ramified places");
        alpha[static_cast<std::size_t>(P.index - 1)] = c;
    }
    GeneratingSet gamma(C, alpha);
    return std::none_of(gamma.elements().begin(), gamma.elements().end(), [](const SemigroupVector& g) {
        return std::any_of(g.begin(), g.end(), [](int v) { return v != 0; });
    });
}

int NonspecialRecipe::degree() const {
    int d = 0;
    for (std::size_t j = 0; j < s.size(); ++j) d += static_cast<int>(j + 1) * s[j];
    return d;
}

NonspecialRecipe nonspecial_recipe(int r, int m) {
    if (r < 1 || m < 1 || std::gcd(r, m) != 1) throw SemigroupError("recipe needs coprime positive r, m");
    NonspecialRecipe rec;
    rec.top = std::max(0, top_index(r, m));
    for (int j = 1; j <= rec.top; ++j) rec.l.push_back(r - (r * j) / m);
    for (int j = 1; j <= rec.top; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        rec.s.push_back(j < rec.top ? rec.l[idx] - rec.l[idx + 1] : rec.l[idx] - 1);
    }
    for (int j = 1; j <= rec.top; ++j)
        for (int c = 0; c < rec.s[static_cast<std::size_t>(j - 1)]; ++c) rec.slots.push_back(j);
    return rec;
}

Divisor nonspecial_degree_g(const KummerCurve& C, const std::optional<std::vector<int>>& assignment) {
    const auto rec = nonspecial_recipe(C.r(), C.m());
    std::vector<int> places;
    if (assignment) {
        places = *assignment;
        if (places.size() != rec.slots.size())
            throw SemigroupError("assignment needs " + std::to_string(rec.slots.size()) + " places");
        std::set<int> seen;
        for (int i : places) {
            if (i < 1 || i > C.r()) throw SemigroupError("assignment index " + std::to_string(i) + " out of range");
            if (!seen.insert(i).second) throw SemigroupError("assignment repeats a place");
        }
    } else {
        if (static_cast<int>(rec.slots.size()) > C.r()) throw SemigroupError("not enough ramified places");
        for (std::size_t k = 0; k < rec.slots.size(); ++k) places.push_back(static_cast<int>(k) + 1);
    }
    Divisor A;
    for (std::size_t k = 0; k < rec.slots.size(); ++k) A.set(Place::ramified(places[k]), rec.slots[k]);
    return A;
}

std::vector<Divisor> enumerate_nonspecial_degree_g(const KummerCurve& C) {
    const auto rec = nonspecial_recipe(C.r(), C.m());
    std::set<Divisor, DivisorLess> out;
    std::vector<int> chosen;
    std::vector<bool> used(static_cast<std::size_t>(C.r()) + 1, false);
    std::function<void()> rec_assign = [&]() {
        if (chosen.size() == rec.slots.size()) {
            out.insert(nonspecial_degree_g(C, chosen));
            return;
        }
        for (int i = 1; i <= C.r(); ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            chosen.push_back(i);
            rec_assign();
            chosen.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec_assign();
    return {out.begin(), out.end()};
}

Divisor nonspecial_degree_g_minus_1(const KummerCurve& C, const std::optional<std::vector<int>>& assignment,
                                    const Place& P) {
    if (!C.is_rational_place(P)) throw SemigroupError("P is not a rational place of the curve");
    Divisor A = nonspecial_degree_g(C, assignment);
    if (A.coefficient(P) != 0) throw SemigroupError("P lies in the support of the degree-g divisor");
    A.add(P, -1);
    return A;
}

std::vector<Divisor> effective_ramified_divisors(const KummerCurve& C, int degree) {
    std::vector<Divisor> out;
    if (degree < 0) return out;
    const std::vector<int> caps(static_cast<std::size_t>(C.r()), degree);
    std::vector<int> parts(caps.size(), 0);
    for_each_composition(degree, caps, parts, 0, [&](const std::vector<int>& c) {
        Divisor A;
        for (std::size_t i = 0; i < c.size(); ++i) A.set(Place::ramified(static_cast<int>(i) + 1), c[i]);
        out.push_back(std::move(A));
    });
    std::sort(out.begin(), out.end(), DivisorLess{});
    return out;
}

bool floor_identity_checks(int r, int m) {
    if (r < 1 || m < 1 || std::gcd(r, m) != 1) throw SemigroupError("floor identities need coprime positive r, m");
    const int t = r % m;
    for (int j = 1; j <= m - 1; ++j) {
        const int jump = (r * (j + 1)) / m - (r * j) / m;
        // j = m - 1 always jumps: k = t puts the integer t in (tj/m, t(j+1)/m].
        bool special = j == m - 1;
        for (int k = 1; k <= t - 1; ++k)
            if (j == (k * m) / t) special = true;
        if (jump != r / m + (special ? 1 : 0)) return false;
    }
    int sum = 0;
    for (int k = 1; k <= t - 1; ++k) sum += (k * m) / t;
    const int expected = t == 0 ? 0 : (m - 1) * (t - 1) / 2;
    return sum == expected;
}

}  // namespace kummer_lcd
