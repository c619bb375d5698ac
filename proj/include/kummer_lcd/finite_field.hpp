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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kummer_lcd {

class FieldError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (field elements, places, divisors, functions).
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Element of GF(p^k) stored as its power-basis coefficient vector packed in
/// base p: packed = c0 + c1*p + ... + c_{k-1}*p^{k-1}.
struct Elem {
    std::uint32_t packed = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
    int p = 2;
    int k = 1;
    std::vector<int> modulus;    // k+1 coefficients, little endian, monic
    std::vector<int> generator;  // k coefficients

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Finite field GF(p^k), p^k <= 2^16. Immutable after construction; the
/// log/antilog tables are built eagerly in the constructor.
class GaloisField {
   public:
    /// Uses the built-in default modulus for (p, k).
    static std::shared_ptr<const GaloisField> make(int p, int k);
    /// Validates that `modulus` is monic irreducible of degree k.
    static std::shared_ptr<const GaloisField> make(int p, int k, std::vector<int> modulus);

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    const FieldSpec& spec() const noexcept { return spec_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    Elem generator() const noexcept { return antilog_[1 % (q_ - 1)]; }
    Elem from_int(long long v) const;

    Elem add(Elem x, Elem y) const noexcept;
    Elem sub(Elem x, Elem y) const noexcept;
    Elem neg(Elem x) const noexcept;
    Elem mul(Elem x, Elem y) const noexcept {
        if (x.packed == 0 || y.packed == 0) return Elem{0};
        std::uint32_t s = log_[x.packed] + log_[y.packed];
        if (s >= q_ - 1) s -= q_ - 1;
        return antilog_[s];
    }
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, long long e) const;
    /// Generator power g^e (e reduced mod p^k - 1).
    Elem gen_pow(long long e) const;

    /// Discrete log to the pinned generator; x must be nonzero.
    std::uint32_t log(Elem x) const;
    /// Position of x in `elements()`.
    std::uint32_t index_of(Elem x) const noexcept { return x.packed == 0 ? 0 : log_[x.packed] + 1; }
    /// 0, g^0, g^1, ..., g^{q-2}.
    const std::vector<Elem>& elements() const noexcept { return elements_; }

    std::vector<int> coeffs(Elem x) const;
    Elem from_coeffs(std::span<const int> c) const;

    /// "[c0,c1,...]".
    std::string to_string(Elem x) const;
    /// "0", "1", "a", "a^j" in terms of the pinned generator.
    std::string symbol(Elem x) const;
    /// Accepts "[c0,...]" (exactly k entries) and the aliases "0", "1", "a", "a^j".
    Elem parse(std::string_view text) const;

    bool same_as(const GaloisField& other) const noexcept { return spec_ == other.spec_; }

   private:
    GaloisField(int p, int k, std::vector<int> modulus);

    int p_;
    int k_;
    std::uint32_t q_;
    FieldSpec spec_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> antilog_;  // size q-1, antilog_[i] = g^i
    std::vector<Elem> elements_;
    std::vector<std::uint32_t> pow_p_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Monic irreducible modulus used when none is supplied (pinned table,
/// deterministic search for pairs not in the table).
std::vector<int> default_modulus(int p, int k);

/// Trial factorization over GF(p).
bool is_irreducible_mod_p(int p, std::span<const int> poly);

/// Field element carrying its field, for API boundaries where mixing fields
/// must be detected. Arithmetic across different fields throws FieldError.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<int> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_.packed == 0; }

    FieldElement inv() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(long long e) const { return {field_, field_->pow(value_, e)}; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
    friend bool operator==(const FieldElement& x, const FieldElement& y);

    std::string to_string() const { return field_->to_string(value_); }

   private:
    FieldPtr field_;
    Elem value_;
};

std::vector<FieldElement> enumerate(const FieldPtr& field);

/// All y in the field with F(y) = c, F given by coefficients (low degree
/// first). Exhaustive scan; result in enumeration order.
std::vector<Elem> solve_additive(const GaloisField& field, std::span<const Elem> poly, Elem c);

/// Evaluate a univariate polynomial (low degree first) at x.
Elem eval_poly(const GaloisField& field, std::span<const Elem> poly, Elem x);

}  // namespace kummer_lcd
