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

#include <vector>

#include "kummer_lcd/finite_field.hpp"

namespace kummer_lcd {

// Dense univariate polynomials in y, low degree first, no trailing zeros.
// The zero polynomial has no coefficients. Arithmetic takes the field as an
// explicit argument so that polynomials stay plain values.
using Poly = std::vector<Elem>;

namespace poly {

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly constant(const GaloisField& F, Elem c);
Poly monomial(const GaloisField& F, int k);  // y^k
Poly linear(const GaloisField& F, Elem alpha);  // y - alpha

Poly add(const GaloisField& F, const Poly& f, const Poly& g);
Poly sub(const GaloisField& F, const Poly& f, const Poly& g);
Poly mul(const GaloisField& F, const Poly& f, const Poly& g);
Poly scale(const GaloisField& F, const Poly& f, Elem c);
Poly pow_linear(const GaloisField& F, Elem alpha, int e);  // (y - alpha)^e

/// Multiplicity of alpha as a root of f (f nonzero).
int root_order(const GaloisField& F, const Poly& f, Elem alpha);
/// f / (y - alpha)^e, requires exact divisibility.
Poly divide_linear(const GaloisField& F, const Poly& f, Elem alpha, int e);

Elem eval(const GaloisField& F, const Poly& f, Elem y);

}  // namespace poly
}  // namespace kummer_lcd
