/*
   Copyright 2026 The pencils authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "pencils/field.hpp"

using namespace pencils;

namespace {

// schoolbook GF(2)[x] product, reduced one bit at a time
unsigned slow_mul(unsigned a, unsigned b, unsigned modulus, unsigned h) {
    unsigned r = 0;
    for (unsigned i = 0; i < h; ++i)
        if ((b >> i) & 1u) r ^= a << i;
    for (unsigned bit = 2 * h; bit-- > h;)
        if ((r >> bit) & 1u) r ^= modulus << (bit - h);
    return r;
}

unsigned slow_pow(unsigned a, unsigned e, unsigned modulus, unsigned h) {
    unsigned r = 1;
    while (e--) r = slow_mul(r, a, modulus, h);
    return r;
}

unsigned slow_trace(unsigned a, unsigned modulus, unsigned h) {
    unsigned t = 0, x = a;
    for (unsigned i = 0; i < h; ++i) {
        t ^= x;
        x = slow_mul(x, x, modulus, h);
    }
    return t;
}

struct Config {
    unsigned q, h, modulus;
};

const Config kConfigs[] = {{2, 1, 0b11}, {4, 2, 0b111}, {8, 3, 0b1011}, {16, 4, 0b10011}, {8, 3, 0b1101}};

}  // namespace

TEST_CASE("multiplication matches schoolbook products") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        CHECK(f.modulus() == c.modulus);
        for (unsigned a = 0; a < c.q; ++a)
            for (unsigned b = 0; b < c.q; ++b) REQUIRE(f.mul(Elem(a), Elem(b)) == slow_mul(a, b, c.modulus, c.h));
    }
}

TEST_CASE("standard moduli") {
    CHECK(Field(2).modulus() == 0b11);
    CHECK(Field(4).modulus() == 0b111);
    CHECK(Field(8).modulus() == 0b1011);
    CHECK(Field(16).modulus() == 0b10011);
}

TEST_CASE("field axioms hold exhaustively at q=2 and q=4") {
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(Field::add(Elem(a), Elem(a)) == 0);
            if (a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.mul(Elem(a), Elem(b)) == f.mul(Elem(b), Elem(a)));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(f.mul(f.mul(Elem(a), Elem(b)), Elem(c)) == f.mul(Elem(a), f.mul(Elem(b), Elem(c))));
                    CHECK(f.mul(Elem(a), Field::add(Elem(b), Elem(c))) ==
                          Field::add(f.mul(Elem(a), Elem(b)), f.mul(Elem(a), Elem(c))));
                }
            }
        }
    }
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(Field(4).inv(0), std::domain_error); }

TEST_CASE("trace") {
    CHECK(Field(2).trace(1) == 1);
    CHECK(Field(4).trace(1) == 0);
    CHECK(Field(8).trace(1) == 1);
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        std::size_t ones = 0;
        for (unsigned a = 0; a < c.q; ++a) {
            REQUIRE(f.trace(Elem(a)) == slow_trace(a, c.modulus, c.h));
            CHECK(f.trace(f.sqr(Elem(a))) == f.trace(Elem(a)));
            ones += f.trace(Elem(a));
            for (unsigned b = 0; b < c.q; ++b)
                CHECK(f.trace(Field::add(Elem(a), Elem(b))) == (f.trace(Elem(a)) ^ f.trace(Elem(b))));
        }
        CHECK(ones == c.q / 2);
    }
}

TEST_CASE("square roots") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        for (unsigned a = 0; a < c.q; ++a) {
            CHECK(f.sqr(f.sqrt(Elem(a))) == a);
            CHECK(f.sqrt(Elem(a)) == slow_pow(a, 1u << (c.h - 1), c.modulus, c.h));
        }
    }
    const Field f4(4);
    CHECK(f4.sqrt(2) == 3);  // sqrt(w) = w^2
}

TEST_CASE("pow, order, primitive element, cubes") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        for (unsigned a = 1; a < c.q; ++a) {
            CHECK(f.pow(Elem(a), 5) == slow_pow(a, 5, c.modulus, c.h));
            unsigned n = 1;
            while (slow_pow(a, n, c.modulus, c.h) != 1) ++n;
            CHECK(f.order(Elem(a)) == n);
            bool cube = false;
            for (unsigned x = 1; x < c.q; ++x) cube = cube || slow_pow(x, 3, c.modulus, c.h) == a;
            CHECK(f.is_cube(Elem(a)) == cube);
        }
        CHECK(f.order(f.primitive_element()) == c.q - 1);
        for (unsigned a = 1; a < f.primitive_element(); ++a) CHECK(f.order(Elem(a)) < c.q - 1);
    }
}

TEST_CASE("solve_quadratic agrees with brute-force roots") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        for (unsigned al = 1; al < c.q; ++al)
            for (unsigned be = 0; be < c.q; ++be)
                for (unsigned ga = 0; ga < c.q; ++ga) {
                    std::vector<Elem> brute;
                    for (unsigned x = 0; x < c.q; ++x) {
                        const unsigned v = slow_mul(al, slow_mul(x, x, c.modulus, c.h), c.modulus, c.h) ^
                                           slow_mul(be, x, c.modulus, c.h) ^ ga;
                        if (v == 0) brute.push_back(Elem(x));
                    }
                    REQUIRE(solve_quadratic(f, Elem(al), Elem(be), Elem(ga)) == brute);
                }
    }
}

TEST_CASE("solve_quadratic examples") {
    CHECK(solve_quadratic(Field(2), 1, 1, 1).empty());
    CHECK(solve_quadratic(Field(4), 1, 1, 1) == std::vector<Elem>{2, 3});
    CHECK(solve_quadratic(Field(4), 1, 0, 2) == std::vector<Elem>{3});
    CHECK_THROWS_AS(solve_quadratic(Field(4), 0, 1, 1), std::invalid_argument);
}

TEST_CASE("parameter searches return the first valid element") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        const auto inv_trace = [&](unsigned g) { return slow_trace(f.inv(Elem(g)), c.modulus, c.h); };
        const Elem g1 = find_gamma_inv_trace(f);
        CHECK(inv_trace(g1) == 1);
        for (unsigned g = 1; g < g1; ++g) CHECK(inv_trace(g) == 0);
        const Elem g2 = find_gamma_trace(f);
        CHECK(slow_trace(g2, c.modulus, c.h) == 1);
        for (unsigned g = 1; g < g2; ++g) CHECK(slow_trace(g, c.modulus, c.h) == 0);
    }
    CHECK(find_gamma_inv_trace(Field(2)) == 1);
    CHECK(find_gamma_inv_trace(Field(4)) == 2);
    CHECK(find_gamma_inv_trace(Field(8)) == 1);
    CHECK(find_gamma_trace(Field(2)) == 1);
    CHECK(find_gamma_trace(Field(4)) == 2);
    CHECK(find_gamma_trace(Field(8)) == 1);
}

TEST_CASE("rootless cubics") {
    for (const auto& c : kConfigs) {
        const Field f(c.q, c.modulus);
        const auto rootless = [&](unsigned b, unsigned cc) {
            for (unsigned x = 0; x < c.q; ++x)
                if ((slow_mul(b, slow_pow(x, 3, c.modulus, c.h), c.modulus, c.h) ^ slow_mul(cc, x, c.modulus, c.h) ^
                     1u) == 0)
                    return false;
            return true;
        };
        for (unsigned b = 0; b < c.q; ++b)
            for (unsigned cc = 0; cc < c.q; ++cc) CHECK(cubic_is_rootless(f, Elem(b), Elem(cc)) == rootless(b, cc));
        const CubicParams p = find_irreducible_cubic_params(f);
        CHECK(p.b != 0);
        CHECK(rootless(p.b, p.c));
        bool earlier = false;
        for (unsigned b = 1; b < c.q; ++b)
            for (unsigned cc = 0; cc < c.q; ++cc)
                if (b < p.b || (b == p.b && cc < p.c)) earlier = earlier || rootless(b, cc);
        CHECK_FALSE(earlier);
    }
    CHECK(find_irreducible_cubic_params(Field(2)) == CubicParams{1, 1});
    // every element of GF(8) is a cube, so c = 0 never works there
    const Field f8(8);
    for (unsigned b = 1; b < 8; ++b) CHECK_FALSE(cubic_is_rootless(f8, Elem(b), 0));
    CHECK(find_irreducible_cubic_params(f8).c != 0);
}

TEST_CASE("irreducibility over GF(2)") {
    for (unsigned p = 2; p < 512; ++p) {
        unsigned deg = 0;
        while ((p >> (deg + 1)) != 0) ++deg;
        bool reducible = false;
        for (unsigned d = 2; d < p && !reducible; ++d) {
            unsigned dd = 0;
            while ((d >> (dd + 1)) != 0) ++dd;
            if (dd == 0 || dd >= deg) continue;
            // polynomial long division remainder
            unsigned r = p;
            for (unsigned bit = deg + 1; bit-- > dd;)
                if ((r >> bit) & 1u) r ^= d << (bit - dd);
            reducible = r == 0;
        }
        CHECK(is_irreducible_gf2(p) == (deg >= 1 && !reducible));
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Field(3), std::invalid_argument);
    CHECK_THROWS_AS(Field(32), std::invalid_argument);
    CHECK_THROWS_AS(Field(8, 0b1001), std::invalid_argument);
    CHECK_THROWS_AS(Field(8, 0b111), std::invalid_argument);
    CHECK_NOTHROW(Field(8, 0b1101));
}

TEST_CASE("hex digits") {
    const Field f(16);
    for (unsigned a = 0; a < 16; ++a) CHECK(parse_hex_elem(to_hex(Elem(a)), f) == a);
    CHECK(to_hex(Elem(11)) == 'b');
    CHECK(parse_hex_elem('B', f) == 11);
    CHECK_THROWS_AS(parse_hex_elem('g', f), std::invalid_argument);
    CHECK_THROWS_AS(parse_hex_elem('4', Field(4)), std::invalid_argument);
}
