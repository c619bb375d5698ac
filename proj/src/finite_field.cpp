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

#include "kummer_lcd/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace kummer_lcd {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Remainder of a modulo b over GF(p); b monic. Both little endian.
std::vector<int> poly_mod(int p, std::vector<int> a, std::span<const int> b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

// Schoolbook product in GF(p)[t]/(modulus), used only while building tables.
std::vector<int> slow_mul(int p, std::span<const int> x, std::span<const int> y, std::span<const int> modulus) {
    std::vector<int> prod(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    auto r = poly_mod(p, std::move(prod), modulus);
    r.resize(modulus.size() - 1, 0);
    return r;
}

std::vector<int> slow_pow(int p, std::vector<int> base, std::uint64_t e, std::span<const int> modulus) {
    std::vector<int> acc(modulus.size() - 1, 0);
    acc[0] = 1;
    while (e > 0) {
        if (e & 1) acc = slow_mul(p, acc, base, modulus);
        base = slow_mul(p, base, base, modulus);
        e >>= 1;
    }
    return acc;
}

std::vector<int> unpack(std::uint32_t v, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    return c;
}

std::uint32_t pack(std::span<const int> c, int p) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + static_cast<std::uint32_t>(c[i]);
    return v;
}

// Pinned moduli. Each entry is checked for irreducibility at construction.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    return table;
}

}  // namespace

bool is_irreducible_mod_p(int p, std::span<const int> poly) {
    std::vector<int> f(poly.begin(), poly.end());
    while (!f.empty() && f.back() % p == 0) f.pop_back();
    if (f.size() < 2) return false;
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // Make monic.
    int lead = f.back();
    int lead_inv = 1;
    while ((lead * lead_inv) % p != 1) ++lead_inv;
    for (int& c : f) c = (c * lead_inv) % p;
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint32_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (std::uint32_t v = 0; v < count; ++v) {
            auto divisor = unpack(v, p, e);
            divisor.push_back(1);
            auto r = poly_mod(p, f, divisor);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int k) {
    const auto& table = modulus_table();
    if (auto it = table.find({p, k}); it != table.end()) return it->second;
    // Smallest monic irreducible (base-p order on the low coefficients)
    // whose root t is primitive.
    std::uint32_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    const std::uint32_t q = count;
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t v = 1; v < count; ++v) {
        auto f = unpack(v, p, k);
        f.push_back(1);
        if (!is_irreducible_mod_p(p, f)) continue;
        std::vector<int> t(k, 0);
        if (k > 1)
            t[1] = 1;
        else
            t[0] = (p - f[0]) % p;
        bool primitive = true;
        for (auto l : factors) {
            auto r = slow_pow(p, t, (q - 1) / l, f);
            if (r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](int c) { return c == 0; })) {
                primitive = false;
                break;
            }
        }
        if (primitive) return f;
    }
    throw FieldError("no primitive modulus found");
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int k) { return make(p, k, default_modulus(p, k)); }

std::shared_ptr<const GaloisField> GaloisField::make(int p, int k, std::vector<int> modulus) {
    return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(modulus)));
}

GaloisField::GaloisField(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw FieldError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > (1u << 16)) throw FieldError("field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (static_cast<int>(modulus.size()) != k + 1) throw FieldError("modulus must have k+1 coefficients");
    for (int c : modulus)
        if (c < 0 || c >= p) throw FieldError("modulus coefficient out of range");
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    if (!is_irreducible_mod_p(p, modulus)) throw FieldError("modulus is not irreducible");

    // First element (by packed value) of full multiplicative order.
    const auto factors = prime_factors(q_ - 1);
    std::vector<int> gen;
    for (std::uint32_t v = 1; v < q_; ++v) {
        auto cand = unpack(v, p, k);
        bool primitive = true;
        for (auto l : factors) {
            auto r = slow_pow(p, cand, (q_ - 1) / l, modulus);
            if (pack(r, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = std::move(cand);
            break;
        }
    }
    if (gen.empty()) throw FieldError("no primitive element found");

    spec_ = FieldSpec{p, k, modulus, gen};

    pow_p_.resize(k_);
    std::uint32_t w = 1;
    for (int i = 0; i < k_; ++i) {
        pow_p_[i] = w;
        w *= p_;
    }

    log_.assign(q_, 0);
    antilog_.resize(q_ - 1);
    std::vector<int> cur(k, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        std::uint32_t v = pack(cur, p);
        antilog_[i] = Elem{v};
        log_[v] = i;
        cur = slow_mul(p, cur, gen, modulus);
    }
    elements_.reserve(q_);
    elements_.push_back(Elem{0});
    for (auto e : antilog_) elements_.push_back(e);
}

Elem GaloisField::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem GaloisField::add(Elem x, Elem y) const noexcept {
    if (p_ == 2) return Elem{x.packed ^ y.packed};
    std::uint32_t a = x.packed, b = y.packed, out = 0;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        out += d * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return Elem{out};
}

Elem GaloisField::neg(Elem x) const noexcept {
    if (p_ == 2) return x;
    std::uint32_t a = x.packed, out = 0;
    for (int i = 0; i < k_; ++i) {
        std::uint32_t d = (p_ - a % p_) % p_;
        out += d * pow_p_[i];
        a /= p_;
    }
    return Elem{out};
}

Elem GaloisField::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem GaloisField::inv(Elem x) const {
    if (x.packed == 0) throw FieldError("inverse of zero");
    std::uint32_t l = log_[x.packed];
    return antilog_[l == 0 ? 0 : q_ - 1 - l];
}

Elem GaloisField::gen_pow(long long e) const {
    long long n = static_cast<long long>(q_) - 1;
    return antilog_[static_cast<std::size_t>(((e % n) + n) % n)];
}

Elem GaloisField::pow(Elem x, long long e) const {
    if (x.packed == 0) {
        if (e == 0) return one();
        if (e < 0) throw FieldError("negative power of zero");
        return zero();
    }
    long long n = static_cast<long long>(q_) - 1;
    long long l = static_cast<long long>(log_[x.packed]);
    long long r = ((e % n) + n) % n;
    return antilog_[static_cast<std::size_t>((l * r) % n)];
}

std::uint32_t GaloisField::log(Elem x) const {
    if (x.packed == 0) throw FieldError("log of zero");
    return log_[x.packed];
}

std::vector<int> GaloisField::coeffs(Elem x) const { return unpack(x.packed, p_, k_); }

Elem GaloisField::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != k_) throw FieldError("expected " + std::to_string(k_) + " coefficients");
    for (int v : c)
        if (v < 0 || v >= p_) throw FieldError("coefficient out of range [0, p)");
    return Elem{pack(c, p_)};
}

std::string GaloisField::to_string(Elem x) const {
    std::string out = "[";
    auto c = coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    out += ']';
    return out;
}

std::string GaloisField::symbol(Elem x) const {
    if (x.packed == 0) return "0";
    std::uint32_t l = log_[x.packed];
    if (l == 0) return "1";
    if (l == 1) return "a";
    return "a^" + std::to_string(l);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view s, std::string_view context) {
    s = trim(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed integer '" + std::string(s) + "' in " + std::string(context));
    return v;
}

}  // namespace

Elem GaloisField::parse(std::string_view text) const {
    auto s = trim(text);
    if (s.empty()) throw ParseError("empty field element");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated field element '" + std::string(s) + "'");
        auto body = s.substr(1, s.size() - 2);
        std::vector<int> c;
        while (true) {
            auto comma = body.find(',');
            auto tok = body.substr(0, comma);
            c.push_back(static_cast<int>(parse_int(tok, text)));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return from_coeffs(c);
    }
    if (s == "a") return generator();
    if (s.size() > 2 && s[0] == 'a' && s[1] == '^') return gen_pow(parse_int(s.substr(2), text));
    long long v = parse_int(s, text);
    if (v < 0 || v >= p_) throw ParseError("integer alias '" + std::string(s) + "' outside the prime field");
    return Elem{static_cast<std::uint32_t>(v)};
}

namespace {

void require_same(const FieldElement& x, const FieldElement& y) {
    if (x.field() != y.field() && !x.field()->same_as(*y.field()))
        throw FieldError("field elements belong to different fields");
}

}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return {x.field_, x.field_->add(x.value_, y.value_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return {x.field_, x.field_->sub(x.value_, y.value_)};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return {x.field_, x.field_->mul(x.value_, y.value_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    require_same(x, y);
    return {x.field_, x.field_->div(x.value_, y.value_)};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field_->same_as(*y.field_) && x.value_ == y.value_;
}

std::vector<FieldElement> enumerate(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->order());
    for (auto e : field->elements()) out.emplace_back(field, e);
    return out;
}

Elem eval_poly(const GaloisField& field, std::span<const Elem> poly, Elem x) {
    Elem acc = field.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = field.add(field.mul(acc, x), poly[i]);
    return acc;
}

std::vector<Elem> solve_additive(const GaloisField& field, std::span<const Elem> poly, Elem c) {
    std::vector<Elem> roots;
    for (auto y : field.elements())
        if (eval_poly(field, poly, y) == c) roots.push_back(y);
    return roots;
}

}  // namespace kummer_lcd
