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
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kummer_lcd/finite_field.hpp"
#include "kummer_lcd/polynomial.hpp"

namespace kummer_lcd {

class CurveError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Rational place of a Kummer curve prod_i (y - alpha_i) = x^m.
///
/// Ramified(i) is the point (0, alpha_i), 1-based i. Infinity is the unique
/// pole of x. Affine(a, b) is an unramified point with a != 0.
struct Place {
    enum class Kind : int { Ramified = 0, Infinity = 1, Affine = 2 };

    Kind kind = Kind::Infinity;
    int index = 0;
    Elem a{};
    Elem b{};

    static Place ramified(int i) { return Place{Kind::Ramified, i, {}, {}}; }
    static Place infinity() { return Place{Kind::Infinity, 0, {}, {}}; }
    static Place affine(Elem a, Elem b) { return Place{Kind::Affine, 0, a, b}; }

    bool is_ramified() const noexcept { return kind == Kind::Ramified; }
    bool is_infinity() const noexcept { return kind == Kind::Infinity; }
    bool is_affine() const noexcept { return kind == Kind::Affine; }

    friend auto operator<=>(const Place&, const Place&) = default;
};

/// Finite formal sum of places with nonzero integer coefficients.
class Divisor {
   public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<const Place, int>> terms);

    int coefficient(const Place& P) const;
    void set(const Place& P, int c);
    void add(const Place& P, int c) { set(P, coefficient(P) + c); }

    int degree() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_effective() const;
    std::vector<Place> support() const;
    const std::map<Place, int>& terms() const noexcept { return coeffs_; }

    Divisor operator-() const;
    friend Divisor operator+(const Divisor& A, const Divisor& B);
    friend Divisor operator-(const Divisor& A, const Divisor& B);
    friend Divisor operator*(int c, const Divisor& A);
    friend bool operator==(const Divisor&, const Divisor&) = default;
    /// Partial order, coefficientwise at every place.
    friend bool operator<=(const Divisor& A, const Divisor& B);

   private:
    std::map<Place, int> coeffs_;
};

/// Placewise minimum.
Divisor gcd_divisor(const Divisor& A, const Divisor& B);
/// Placewise maximum.
Divisor lmd_divisor(const Divisor& A, const Divisor& B);

class KummerCurve {
   public:
    KummerCurve(FieldPtr field, std::vector<Elem> alphas, int m, std::string label = {});

    const FieldPtr& field() const noexcept { return field_; }
    const GaloisField& F() const noexcept { return *field_; }
    int r() const noexcept { return static_cast<int>(alphas_.size()); }
    int m() const noexcept { return m_; }
    const std::vector<Elem>& alphas() const noexcept { return alphas_; }
    Elem alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i - 1)); }
    const std::string& label() const noexcept { return label_; }
    int genus() const noexcept { return (m_ - 1) * (r() - 1) / 2; }
    /// prod_i (y - alpha_i), low degree first.
    const Poly& defining_poly() const noexcept { return defining_; }

    /// Infinity, Ramified(1..r), then Affine ordered by the enumeration
    /// order of a, then of b.
    const std::vector<Place>& rational_points() const noexcept { return points_; }
    /// Affine places only, in rational_points order.
    std::span<const Place> affine_points() const noexcept;

    bool is_rational_place(const Place& P) const;
    bool on_curve(Elem a, Elem b) const;

    Divisor divisor_of_x() const;
    Divisor divisor_of_y_minus_alpha(int i) const;
    /// Divisor of x^t * prod_i (y - alpha_i)^{c_i}.
    Divisor divisor_of_monomial(int t, std::span<const int> exponents) const;

    /// Sum of all Affine places.
    Divisor standard_D() const;

    std::string place_to_string(const Place& P) const;
    Place parse_place(std::string_view text) const;
    /// "c1*P1+c2*P2+c*Pinf+c*P([..],[..])", "0" for the zero divisor.
    std::string divisor_to_string(const Divisor& D) const;
    Divisor parse_divisor(std::string_view text) const;

   private:
    FieldPtr field_;
    std::vector<Elem> alphas_;
    int m_;
    std::string label_;
    Poly defining_;
    std::vector<Place> points_;
};

KummerCurve make_curve(FieldPtr field, std::vector<Elem> alphas, int m, std::string label = {});

}  // namespace kummer_lcd
