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

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kummer_lcd/curve.hpp"
#include "kummer_lcd/polynomial.hpp"

namespace kummer_lcd {

class FunctionSpaceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Element of the function field of a Kummer curve, written
///
///   f = sum_{t=0}^{m-1} x^t * num_t(y) / prod_i (y - alpha_i)^{den_t[i]}
///
/// Every term is kept in lowest form (num_t not divisible by y - alpha_i
/// whenever den_t[i] > 0) and zero terms are dropped, so two elements are
/// equal iff their term maps are equal. x^m is rewritten as
/// prod_i (y - alpha_i).
class FunctionElement {
   public:
    struct Term {
        Poly num;
        std::vector<int> den;  // one exponent per alpha_i
        friend bool operator==(const Term&, const Term&) = default;
    };

    FunctionElement() = default;

    static FunctionElement constant(const KummerCurve& C, Elem c);
    /// x^t * prod_i (y - alpha_i)^{exponents[i]}, any integers t and exponents.
    static FunctionElement monomial(const KummerCurve& C, int t, std::span<const int> exponents);
    /// x^t * num / prod_i (y - alpha_i)^{den[i]}, 0 <= t < m, den[i] >= 0.
    static FunctionElement term(const KummerCurve& C, int t, Poly num, std::vector<int> den);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<int, Term>& terms() const noexcept { return terms_; }

    FunctionElement add(const KummerCurve& C, const FunctionElement& g) const;
    FunctionElement sub(const KummerCurve& C, const FunctionElement& g) const;
    FunctionElement scale(const KummerCurve& C, Elem c) const;
    FunctionElement mul(const KummerCurve& C, const FunctionElement& g) const;

    friend bool operator==(const FunctionElement&, const FunctionElement&) = default;

   private:
    void put(const KummerCurve& C, int t, Term term);
    std::map<int, Term> terms_;
};

/// Valuation of a function at a rational place. At ramified places and at
/// infinity the value is exact. At affine places only "0" versus "at least
/// 1" is decided, signalled by `lower_bound`.
struct Valuation {
    int value = 0;
    bool lower_bound = false;
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation valuation(const KummerCurve& C, const FunctionElement& f, const Place& P);

/// f(a, b) at an affine place with a != 0.
Elem evaluate(const KummerCurve& C, const FunctionElement& f, const Place& P);

struct RRBasis {
    Divisor divisor;
    std::vector<FunctionElement> functions;
    int dimension = 0;
};

/// Basis of L(G) for G with arbitrary coefficients at ramified places and
/// infinity and coefficients in {-1, 0} at affine places.
RRBasis riemann_roch_basis(const KummerCurve& C, const Divisor& G);

/// dim L(G). Uses the closed-form count when G has no affine part.
int ell(const KummerCurve& C, const Divisor& G);
int index_of_specialty(const KummerCurve& C, const Divisor& G);
bool is_nonspecial(const KummerCurve& C, const Divisor& G);

/// "x^t*(c*y^k+...)/((y-alpha)^d*...) + ...", "0" for the zero function.
std::string function_to_string(const KummerCurve& C, const FunctionElement& f);
FunctionElement parse_function(const KummerCurve& C, std::string_view text);

}  // namespace kummer_lcd
