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

#include "kummer_lcd/curve.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace kummer_lcd {

// ---------------------------------------------------------------------------
// Divisor

Divisor::Divisor(std::initializer_list<std::pair<const Place, int>> terms) {
    for (const auto& [P, c] : terms) add(P, c);
}

int Divisor::coefficient(const Place& P) const {
    auto it = coeffs_.find(P);
    return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::set(const Place& P, int c) {
    if (c == 0)
        coeffs_.erase(P);
    else
        coeffs_[P] = c;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [P, c] : coeffs_) d += c;
    return d;
}

bool Divisor::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    out.reserve(coeffs_.size());
    for (const auto& [P, c] : coeffs_) out.push_back(P);
    return out;
}

Divisor Divisor::operator-() const { return (-1) * *this; }

Divisor operator+(const Divisor& A, const Divisor& B) {
    Divisor out = A;
    for (const auto& [P, c] : B.coeffs_) out.add(P, c);
    return out;
}

Divisor operator-(const Divisor& A, const Divisor& B) {
    Divisor out = A;
    for (const auto& [P, c] : B.coeffs_) out.add(P, -c);
    return out;
}

Divisor operator*(int c, const Divisor& A) {
    Divisor out;
    if (c == 0) return out;
    for (const auto& [P, v] : A.coeffs_) out.coeffs_[P] = c * v;
    return out;
}

bool operator<=(const Divisor& A, const Divisor& B) {
    std::set<Place> places;
    for (const auto& [P, c] : A.coeffs_) places.insert(P);
    for (const auto& [P, c] : B.coeffs_) places.insert(P);
    return std::all_of(places.begin(), places.end(),
                       [&](const Place& P) { return A.coefficient(P) <= B.coefficient(P); });
}

namespace {

template <class Pick>
Divisor placewise(const Divisor& A, const Divisor& B, Pick pick) {
    std::set<Place> places;
    for (const auto& [P, c] : A.terms()) places.insert(P);
    for (const auto& [P, c] : B.terms()) places.insert(P);
    Divisor out;
    for (const auto& P : places) out.set(P, pick(A.coefficient(P), B.coefficient(P)));
    return out;
}

}  // namespace

Divisor gcd_divisor(const Divisor& A, const Divisor& B) {
    return placewise(A, B, [](int x, int y) { return std::min(x, y); });
}

Divisor lmd_divisor(const Divisor& A, const Divisor& B) {
    return placewise(A, B, [](int x, int y) { return std::max(x, y); });
}

// ---------------------------------------------------------------------------
// KummerCurve

KummerCurve::KummerCurve(FieldPtr field, std::vector<Elem> alphas, int m, std::string label)
    : field_(std::move(field)), alphas_(std::move(alphas)), m_(m), label_(std::move(label)) {
    if (!field_) throw CurveError("curve needs a constant field");
    if (alphas_.empty()) throw CurveError("curve needs at least one root alpha");
    if (m_ < 1) throw CurveError("exponent m must be positive");
    for (auto a : alphas_)
        if (a.packed >= field_->order()) throw CurveError("root alpha is not an element of the field");
    {
        auto sorted = alphas_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw CurveError("roots alpha_i must be pairwise distinct");
    }
    if (std::gcd(r(), m_) != 1)
        throw CurveError("gcd(r, m) must be 1 (r=" + std::to_string(r()) + ", m=" + std::to_string(m_) + ")");
    if (m_ % field_->characteristic() == 0)
        throw CurveError("the characteristic must not divide m");

    const auto& F = *field_;
    defining_ = Poly{F.one()};
    for (auto a : alphas_) defining_ = poly::mul(F, defining_, poly::linear(F, a));

    // Bucket b by the value of prod (b - alpha_i).
    std::vector<std::vector<Elem>> fibre(F.order());
    for (auto b : F.elements()) fibre[poly::eval(F, defining_, b).packed].push_back(b);

    points_.push_back(Place::infinity());
    for (int i = 1; i <= r(); ++i) points_.push_back(Place::ramified(i));
    for (auto a : F.elements()) {
        if (a.packed == 0) continue;
        for (auto b : fibre[F.pow(a, m_).packed]) points_.push_back(Place::affine(a, b));
    }
}

std::span<const Place> KummerCurve::affine_points() const noexcept {
    return std::span<const Place>(points_).subspan(static_cast<std::size_t>(1 + r()));
}

bool KummerCurve::on_curve(Elem a, Elem b) const {
    return poly::eval(F(), defining_, b) == F().pow(a, m_);
}

bool KummerCurve::is_rational_place(const Place& P) const {
    switch (P.kind) {
        case Place::Kind::Infinity:
            return true;
        case Place::Kind::Ramified:
            return P.index >= 1 && P.index <= r();
        case Place::Kind::Affine:
            return P.a.packed != 0 && P.a.packed < F().order() && P.b.packed < F().order() && on_curve(P.a, P.b);
    }
    return false;
}

Divisor KummerCurve::divisor_of_x() const {
    Divisor D;
    for (int i = 1; i <= r(); ++i) D.set(Place::ramified(i), 1);
    D.set(Place::infinity(), -r());
    return D;
}

Divisor KummerCurve::divisor_of_y_minus_alpha(int i) const {
    if (i < 1 || i > r()) throw CurveError("ramified index " + std::to_string(i) + " out of range");
    return Divisor{{Place::ramified(i), m_}, {Place::infinity(), -m_}};
}

Divisor KummerCurve::divisor_of_monomial(int t, std::span<const int> exponents) const {
    if (static_cast<int>(exponents.size()) != r()) throw CurveError("need one exponent per root alpha_i");
    Divisor D;
    int total = 0;
    for (int i = 1; i <= r(); ++i) {
        D.set(Place::ramified(i), t + m_ * exponents[static_cast<std::size_t>(i - 1)]);
        total += exponents[static_cast<std::size_t>(i - 1)];
    }
    D.set(Place::infinity(), -r() * t - m_ * total);
    return D;
}

Divisor KummerCurve::standard_D() const {
    Divisor D;
    for (const auto& P : affine_points()) D.set(P, 1);
    return D;
}

std::string KummerCurve::place_to_string(const Place& P) const {
    switch (P.kind) {
        case Place::Kind::Infinity:
            return "Pinf";
        case Place::Kind::Ramified:
            return "P" + std::to_string(P.index);
        case Place::Kind::Affine:
            return "P(" + F().to_string(P.a) + "," + F().to_string(P.b) + ")";
    }
    return {};
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Place KummerCurve::parse_place(std::string_view text) const {
    auto s = strip(text);
    if (s == "Pinf" || s == "Pinfty" || s == "P_inf") return Place::infinity();
    if (s.size() >= 2 && s[0] == 'P' && s[1] == '(') {
        if (s.back() != ')') throw ParseError("malformed place '" + std::string(s) + "'");
        auto body = s.substr(2, s.size() - 3);
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '[') ++depth;
            if (body[i] == ']') --depth;
            if (body[i] == ',' && depth == 0) {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos) throw ParseError("affine place needs two coordinates");
        Place P = Place::affine(F().parse(body.substr(0, split)), F().parse(body.substr(split + 1)));
        if (!is_rational_place(P)) throw ParseError("'" + std::string(s) + "' is not an affine point with a != 0");
        return P;
    }
    if (s.size() >= 2 && s[0] == 'P') {
        int i = 0;
        auto digits = s.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("malformed place '" + std::string(s) + "'");
        if (i < 1 || i > r()) throw ParseError("ramified index " + std::to_string(i) + " out of range");
        return Place::ramified(i);
    }
    throw ParseError("malformed place '" + std::string(s) + "'");
}

std::string KummerCurve::divisor_to_string(const Divisor& D) const {
    if (D.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [P, c] : D.terms()) {
        if (!first && c > 0) out += '+';
        out += std::to_string(c) + "*" + place_to_string(P);
        first = false;
    }
    return out;
}

Divisor KummerCurve::parse_divisor(std::string_view text) const {
    auto s = strip(text);
    if (s.empty()) throw ParseError("empty divisor");
    if (s == "0") return {};
    Divisor D;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        // Term ends at the next top-level '+' or '-'.
        std::size_t end = pos;
        int depth = 0;
        while (end < s.size()) {
            char ch = s[end];
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') --depth;
            if (depth == 0 && (ch == '+' || ch == '-') && end > pos) break;
            ++end;
        }
        auto term = strip(s.substr(pos, end - pos));
        if (term.empty()) throw ParseError("empty term in divisor '" + std::string(s) + "'");
        int coeff = 1;
        auto star = term.find('*');
        std::string_view place_text = term;
        if (star != std::string_view::npos) {
            auto num = strip(term.substr(0, star));
            auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), coeff);
            if (ec != std::errc() || ptr != num.data() + num.size())
                throw ParseError("malformed coefficient '" + std::string(num) + "'");
            place_text = term.substr(star + 1);
        }
        D.add(parse_place(place_text), sign * coeff);
        pos = end;
    }
    return D;
}

KummerCurve make_curve(FieldPtr field, std::vector<Elem> alphas, int m, std::string label) {
    return KummerCurve(std::move(field), std::move(alphas), m, std::move(label));
}

}  // namespace kummer_lcd
