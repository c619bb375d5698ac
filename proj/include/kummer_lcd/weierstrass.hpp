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

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kummer_lcd/curve.hpp"

namespace kummer_lcd {

class SemigroupError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Entry i belongs to the i-th place of a tuple of ramified places.
using SemigroupVector = std::vector<int>;

/// Entrywise v <= w.
bool entrywise_leq(std::span<const int> v, std::span<const int> w);

/// Gaps of the Weierstrass semigroup at any single ramified place, sorted.
std::vector<int> gap_set_single(const KummerCurve& C);

/// Generators with all entries positive for a tuple of l ramified places,
/// 2 <= l <= r - floor(r/m). Sorted.
std::vector<SemigroupVector> gamma_plus_multi(const KummerCurve& C, int l);

/// Elements of the minimal generating set of H(P_1, ..., P_l) that lie
/// entrywise below `box`, together with the least-upper-bound closure test.
class GeneratingSet {
   public:
    GeneratingSet(const KummerCurve& C, std::span<const int> box);

    const std::vector<SemigroupVector>& elements() const noexcept { return elements_; }
    /// alpha (<= box) is the lub of at most l generators.
    bool generates(std::span<const int> alpha) const;

   private:
    std::vector<int> box_;
    std::vector<SemigroupVector> elements_;
};

/// alpha in H(P_places) decided by the l-jump criterion
/// ell(A) = ell(A - P_j) + 1 for every j, A = sum alpha_i P_i.
bool semigroup_membership_oracle(const KummerCurve& C, std::span<const int> places, std::span<const int> alpha);

/// alpha in H(P_places) decided as a least upper bound of generators.
bool lub_closure_membership(const KummerCurve& C, std::span<const int> places, std::span<const int> alpha);

/// Sufficient non-specialness test for an effective degree-g divisor on
/// ramified places: no nonzero generator lies below its coefficient vector.
bool is_nonspecial_gns(const KummerCurve& C, const Divisor& A);

/// Multiplicity layout of the explicit degree-g non-special divisor.
/// Vectors are indexed by j - 1 for 1 <= j <= top.
struct NonspecialRecipe {
    int top = 0;             // m - 1 - floor(m/r)
    std::vector<int> l;      // l_j = r - floor(r j / m)
    std::vector<int> s;      // s_j = l_j - l_{j+1}, s_top = l_top - 1
    std::vector<int> slots;  // multiplicity j repeated s_j times, ascending

    int degree() const;
};

NonspecialRecipe nonspecial_recipe(int r, int m);

/// Explicit effective non-special divisor of degree g on ramified places.
/// `assignment[k]` is the ramified index receiving slot k; default assigns
/// ascending multiplicities to ascending indices.
Divisor nonspecial_degree_g(const KummerCurve& C, const std::optional<std::vector<int>>& assignment = std::nullopt);

/// Every divisor produced by some injective assignment, sorted and distinct.
std::vector<Divisor> enumerate_nonspecial_degree_g(const KummerCurve& C);

/// A - P for the degree-g divisor A; P must be a rational place outside Supp A.
Divisor nonspecial_degree_g_minus_1(const KummerCurve& C, const std::optional<std::vector<int>>& assignment,
                                    const Place& P);

/// All effective divisors of the given degree supported on ramified places.
std::vector<Divisor> effective_ramified_divisors(const KummerCurve& C, int degree);

/// Floor-sum identities for coprime (r, m): the jump formula for
/// floor(r(j+1)/m) - floor(rj/m) and sum_{k<t} floor(km/t) = (m-1)(t-1)/2.
bool floor_identity_checks(int r, int m);

/// Strict weak order on divisors, for sorting and sets.
struct DivisorLess {
    bool operator()(const Divisor& A, const Divisor& B) const { return A.terms() < B.terms(); }
};

}  // namespace kummer_lcd
