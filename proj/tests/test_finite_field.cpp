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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "kummer_lcd/finite_field.hpp"
#include "kummer_lcd/polynomial.hpp"
#include "oracles.hpp"

using namespace kummer_lcd;

namespace {

const std::vector<std::pair<int, int>> kPinned = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                                  {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1},
                                                  {7, 2}};

std::uint32_t multiplicative_order(const GaloisField& F, Elem x) {
    Elem y = x;
    std::uint32_t n = 1;
    while (y != F.one()) {
        y = oracle::mul(F, y, x);
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("GF(4) uses t^2+t+1 with generator a, a^2 = a + 1") {
    auto F = GaloisField::make(2, 2);
    CHECK(F->spec().modulus == std::vector<int>{1, 1, 1});
    const Elem a = F->parse("a"), a2 = F->parse("a^2");
    CHECK(F->coeffs(a) == std::vector<int>{0, 1});
    CHECK(F->add(a, a) == F->zero());
    CHECK(F->add(a, F->one()) == a2);
    CHECK(F->mul(a, a2) == F->one());
    CHECK(F->inv(F->one()) == F->one());
    CHECK(F->symbol(a2) == "a^2");
    CHECK(F->to_string(a2) == "[1,1]");
}

TEST_CASE("enumeration order is 0, g^0, g^1, ...") {
    auto F = GaloisField::make(2, 2);
    const auto& els = F->elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0] == F->zero());
    CHECK(els[1] == F->one());
    CHECK(els[2] == F->parse("a"));
    CHECK(els[3] == F->parse("a^2"));
    CHECK(GaloisField::make(2, 4)->elements().size() == 16);
    auto F64 = GaloisField::make(2, 6);
    std::set<Elem> distinct(F64->elements().begin(), F64->elements().end());
    CHECK(distinct.size() == 64);
    for (std::uint32_t i = 0; i < F64->order(); ++i) CHECK(F64->index_of(F64->elements()[i]) == i);
}

TEST_CASE("every pinned modulus gives a field with a primitive generator") {
    for (auto [p, k] : kPinned) {
        CAPTURE(p);
        CAPTURE(k);
        auto F = GaloisField::make(p, k);
        const auto& mod = F->spec().modulus;
        REQUIRE(mod.size() == static_cast<std::size_t>(k + 1));
        CHECK(mod.back() == 1);
        CHECK(is_irreducible_mod_p(p, mod));
        // Field check by the oracle: every nonzero element has an inverse.
        for (auto x : F->elements()) {
            if (x.packed == 0) continue;
            bool has_inverse = false;
            for (auto y : F->elements()) has_inverse = has_inverse || oracle::mul(*F, x, y) == F->one();
            CHECK(has_inverse);
        }
        CHECK(multiplicative_order(*F, F->generator()) == F->order() - 1);
        // Pinned generator is the first element (by packed value) of full order.
        for (std::uint32_t v = 1; v < F->generator().packed; ++v)
            CHECK(multiplicative_order(*F, Elem{v}) != F->order() - 1);
    }
}

TEST_CASE("log-table arithmetic matches schoolbook arithmetic exhaustively") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        auto F = GaloisField::make(p, k);
        for (auto x : F->elements())
            for (auto y : F->elements()) {
                REQUIRE(F->mul(x, y) == oracle::mul(*F, x, y));
                REQUIRE(F->add(x, y) == oracle::add(*F, x, y));
            }
    }
}

TEST_CASE("field axioms hold exhaustively on GF(4), GF(8), GF(9)") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto F = GaloisField::make(p, k);
        const auto& E = F->elements();
        for (auto x : E)
            for (auto y : E) {
                CHECK(F->mul(x, y) == F->mul(y, x));
                CHECK(F->add(x, y) == F->add(y, x));
                CHECK(F->sub(F->add(x, y), y) == x);
                if (y.packed) CHECK(F->mul(F->div(x, y), y) == x);
                for (auto z : E) {
                    REQUIRE(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
                    REQUIRE(F->add(F->add(x, y), z) == F->add(x, F->add(y, z)));
                    REQUIRE(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
                }
            }
        CHECK(F->add(F->elements()[2], F->zero()) == F->elements()[2]);
    }
}

TEST_CASE("random sample of axioms on GF(3^4) and GF(2^8)") {
    std::mt19937 rng(7);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 4}, {2, 8}}) {
        auto F = GaloisField::make(p, k);
        std::uniform_int_distribution<std::size_t> pick(0, F->order() - 1);
        for (int it = 0; it < 2000; ++it) {
            Elem x = F->elements()[pick(rng)], y = F->elements()[pick(rng)], z = F->elements()[pick(rng)];
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->mul(x, y) == oracle::mul(*F, x, y));
        }
    }
}

TEST_CASE("Lagrange and Frobenius additivity on fields up to 64 elements") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto F = GaloisField::make(p, k);
        const int pp = F->characteristic();
        for (auto x : F->elements()) {
            if (x.packed) CHECK(F->pow(x, F->order() - 1) == F->one());
            for (auto y : F->elements())
                REQUIRE(F->pow(F->add(x, y), pp) == F->add(F->pow(x, pp), F->pow(y, pp)));
        }
    }
}

TEST_CASE("inversion of zero and mixed fields are rejected") {
    auto F4 = GaloisField::make(2, 2);
    auto F8 = GaloisField::make(2, 3);
    CHECK_THROWS_AS(F4->inv(F4->zero()), FieldError);
    FieldElement x(F4, F4->one()), y(F8, F8->one());
    CHECK_THROWS_AS(x + y, FieldError);
    CHECK_THROWS_AS(x * y, FieldError);
    CHECK((x + x).is_zero());
}

TEST_CASE("text form round-trips and aliases parse") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 1}}) {
        auto F = GaloisField::make(p, k);
        for (auto x : F->elements()) {
            CHECK(F->parse(F->to_string(x)) == x);
            CHECK(F->parse(F->symbol(x)) == x);
        }
    }
    auto F = GaloisField::make(2, 2);
    CHECK(F->parse(" [0, 1] ") == F->parse("a"));
    CHECK(F->parse("1") == F->one());
    CHECK_THROWS_AS(F->parse("[0,1"), ParseError);
    CHECK_THROWS_AS(F->parse("x"), ParseError);
    CHECK_THROWS_AS(F->parse("2"), ParseError);
    CHECK_THROWS(F->parse("[0,2]"));
}

TEST_CASE("solve_additive scans the whole field") {
    auto F4 = GaloisField::make(2, 2);
    Poly y2y = poly::add(*F4, poly::monomial(*F4, 2), poly::monomial(*F4, 1));
    auto roots0 = solve_additive(*F4, y2y, F4->zero());
    CHECK(roots0 == std::vector<Elem>{F4->zero(), F4->one()});
    // a^2 + a = 1, so {a, a^2} is the fibre over 1 and the fibre over a is empty.
    CHECK(solve_additive(*F4, y2y, F4->one()) == std::vector<Elem>{F4->parse("a"), F4->parse("a^2")});
    CHECK(solve_additive(*F4, y2y, F4->parse("a")).empty());

    auto F8 = GaloisField::make(2, 3);
    Poly nt = poly::add(*F8, poly::add(*F8, poly::monomial(*F8, 4), poly::monomial(*F8, 2)), poly::monomial(*F8, 1));
    CHECK(solve_additive(*F8, nt, F8->zero()).size() == 4);
    // y^2 + 1 over GF(3) has no roots.
    auto F3 = GaloisField::make(3, 1);
    Poly y21 = poly::add(*F3, poly::monomial(*F3, 2), poly::constant(*F3, F3->one()));
    CHECK(solve_additive(*F3, y21, F3->zero()).empty());
}

TEST_CASE("default modulus search covers unpinned sizes") {
    auto F = GaloisField::make(11, 2);
    CHECK(F->order() == 121);
    CHECK(is_irreducible_mod_p(11, F->spec().modulus));
    CHECK(multiplicative_order(*F, F->generator()) == 120);
    CHECK(default_modulus(11, 2) == F->spec().modulus);
}

TEST_CASE("an explicit modulus overrides the pinned one") {
    auto F = GaloisField::make(2, 3, {1, 0, 1, 1});
    CHECK(F->spec().modulus == std::vector<int>{1, 0, 1, 1});
    CHECK(multiplicative_order(*F, F->generator()) == 7);
    CHECK_THROWS(GaloisField::make(2, 2, {1, 0, 1}));  // t^2 + 1 = (t+1)^2
}
