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

#include "pencils/field.hpp"

#include <bit>
#include <stdexcept>

namespace pencils {

namespace {

unsigned degree_of_order(unsigned q) {
    switch (q) {
        case 2:
            return 1;
        case 4:
            return 2;
        case 8:
            return 3;
        case 16:
            return 4;
        default:
            throw std::invalid_argument("unsupported field order q=" + std::to_string(q) +
                                        " (expected 2, 4, 8 or 16)");
    }
}

unsigned poly_degree(unsigned p) noexcept { return p == 0 ? 0 : static_cast<unsigned>(std::bit_width(p)) - 1; }

// remainder of a modulo m over GF(2)
unsigned poly_mod(unsigned a, unsigned m) noexcept {
    const unsigned dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
    return a;
}

}  // namespace

Elem clmul_mod(unsigned a, unsigned b, unsigned modulus, unsigned degree) noexcept {
    unsigned product = 0;
    for (unsigned i = 0; i < degree; ++i)
        if ((b >> i) & 1u) product ^= a << i;
    for (unsigned bit = 2 * degree; bit-- > degree;)
        if ((product >> bit) & 1u) product ^= modulus << (bit - degree);
    return static_cast<Elem>(product);
}

bool is_irreducible_gf2(unsigned poly) noexcept {
    const unsigned d = poly_degree(poly);
    if (d == 0) return false;
    for (unsigned divisor = 2; poly_degree(divisor) <= d / 2; ++divisor)
        if (poly_mod(poly, divisor) == 0) return false;
    return true;
}

unsigned Field::standard_modulus(unsigned degree) {
    switch (degree) {
        case 1:
            return 0b11;
        case 2:
            return 0b111;
        case 3:
            return 0b1011;
        case 4:
            return 0b10011;
        default:
            throw std::invalid_argument("unsupported extension degree " + std::to_string(degree));
    }
}

Field::Field(unsigned q) : Field(q, standard_modulus(degree_of_order(q))) {}

Field::Field(unsigned q, unsigned modulus) : q_(q), degree_(degree_of_order(q)), modulus_(modulus) {
    if (poly_degree(modulus) != degree_ || !is_irreducible_gf2(modulus))
        throw std::invalid_argument("modulus is not an irreducible polynomial of degree " +
                                    std::to_string(degree_));

    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) mul_[(a << 4) | b] = clmul_mod(a, b, modulus_, degree_);

    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[a] = static_cast<Elem>(b);

    for (unsigned a = 0; a < q_; ++a) {
        Elem s = static_cast<Elem>(a);
        for (unsigned i = 1; i < degree_; ++i) s = sqr(s);
        sqrt_[a] = s;

        Elem t = 0;
        Elem power = static_cast<Elem>(a);
        for (unsigned i = 0; i < degree_; ++i) {
            t ^= power;
            power = sqr(power);
        }
        trace_[a] = t;
    }

    for (unsigned a = 1; a < q_; ++a) {
        if (order(static_cast<Elem>(a)) == q_ - 1) {
            primitive_ = static_cast<Elem>(a);
            break;
        }
    }
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = 1;
    Elem base = a;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        base = sqr(base);
        e >>= 1;
    }
    return result;
}

unsigned Field::order(Elem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    unsigned k = 1;
    for (Elem x = a; x != 1; x = mul(x, a)) ++k;
    return k;
}

bool Field::is_cube(Elem a) const noexcept {
    if (a == 0 || (q_ - 1) % 3 != 0) return true;
    return pow(a, (q_ - 1) / 3) == 1;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (unsigned a = 0; a < q_; ++a) out[a] = static_cast<Elem>(a);
    return out;
}

std::vector<Elem> solve_quadratic(const Field& field, Elem alpha, Elem beta, Elem gamma) {
    if (alpha == 0) throw std::invalid_argument("solve_quadratic: leading coefficient is zero");
    if (beta == 0) return {field.sqrt(field.div(gamma, alpha))};

    // x = (beta/alpha) y turns the equation into y^2 + y + c = 0.
    const Elem c = field.div(field.mul(alpha, gamma), field.sqr(beta));
    if (field.trace(c) != 0) return {};

    // y = sum_{i=0}^{h-2} (sum_{j>i} delta^(2^j)) c^(2^i) for any delta of trace 1
    const Elem delta = find_gamma_trace(field);
    const unsigned h = field.degree();
    std::vector<Elem> delta_pow(h), c_pow(h);
    delta_pow[0] = delta;
    c_pow[0] = c;
    for (unsigned i = 1; i < h; ++i) {
        delta_pow[i] = field.sqr(delta_pow[i - 1]);
        c_pow[i] = field.sqr(c_pow[i - 1]);
    }
    Elem y = 0;
    for (unsigned i = 0; i + 1 < h; ++i) {
        Elem coeff = 0;
        for (unsigned j = i + 1; j < h; ++j) coeff ^= delta_pow[j];
        y ^= field.mul(coeff, c_pow[i]);
    }
    if (h == 1) y = 0;  // GF(2): y^2 + y = 0 has roots 0, 1

    const Elem scale = field.div(beta, alpha);
    Elem r0 = field.mul(scale, y);
    Elem r1 = field.mul(scale, static_cast<Elem>(y ^ 1));
    if (r1 < r0) std::swap(r0, r1);
    return {r0, r1};
}

Elem find_gamma_inv_trace(const Field& field) {
    for (unsigned g = 1; g < field.q(); ++g)
        if (field.trace(field.inv(static_cast<Elem>(g))) == 1) return static_cast<Elem>(g);
    throw std::logic_error("no element with Tr(1/gamma) = 1");
}

Elem find_gamma_trace(const Field& field) {
    for (unsigned g = 1; g < field.q(); ++g)
        if (field.trace(static_cast<Elem>(g)) == 1) return static_cast<Elem>(g);
    throw std::logic_error("no element with Tr(gamma) = 1");
}

bool cubic_is_rootless(const Field& field, Elem b, Elem c) noexcept {
    for (unsigned x = 0; x < field.q(); ++x) {
        const Elem lambda = static_cast<Elem>(x);
        const Elem value = field.mul(b, field.mul(lambda, field.sqr(lambda))) ^ field.mul(c, lambda) ^ 1;
        if (value == 0) return false;
    }
    return true;
}

CubicParams find_irreducible_cubic_params(const Field& field) {
    for (unsigned b = 1; b < field.q(); ++b)
        for (unsigned c = 0; c < field.q(); ++c)
            if (cubic_is_rootless(field, static_cast<Elem>(b), static_cast<Elem>(c)))
                return {static_cast<Elem>(b), static_cast<Elem>(c)};
    throw std::logic_error("no rootless cubic b x^3 + c x + 1");
}

char to_hex(Elem a) noexcept { return "0123456789abcdef"[a & 0xfu]; }

Elem parse_hex_elem(char digit, const Field& field) {
    unsigned value = 0;
    if (digit >= '0' && digit <= '9')
        value = static_cast<unsigned>(digit - '0');
    else if (digit >= 'a' && digit <= 'f')
        value = static_cast<unsigned>(digit - 'a') + 10;
    else if (digit >= 'A' && digit <= 'F')
        value = static_cast<unsigned>(digit - 'A') + 10;
    else
        throw std::invalid_argument(std::string("not a hex digit: '") + digit + "'");
    if (!field.contains(value))
        throw std::invalid_argument(std::string("digit '") + digit + "' is not an element of GF(" +
                                    std::to_string(field.q()) + ")");
    return static_cast<Elem>(value);
}

}  // namespace pencils
