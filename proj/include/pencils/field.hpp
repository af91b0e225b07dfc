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

#ifndef PENCILS_FIELD_HPP
#define PENCILS_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pencils {

/// Element of GF(2^h): the coefficient bitstring of a polynomial over GF(2) of
/// degree < h, reduced modulo the owning Field's modulus. Always < q.
using Elem = std::uint8_t;

/**
 * @brief The finite field GF(q), q = 2^h with 1 <= h <= 4.
 *
 * Elements are polynomials over GF(2) stored as bitstrings. Multiplication is
 * carry-less multiplication followed by reduction modulo a fixed irreducible
 * polynomial; the full q x q product table is precomputed at construction.
 *
 * Standard moduli (bit i = coefficient of x^i):
 *   h=1: x+1,  h=2: x^2+x+1,  h=3: x^3+x+1,  h=4: x^4+x+1.
 *
 * A Field is immutable after construction and may be shared between threads.
 */
class Field {
   public:
    static constexpr unsigned kMaxDegree = 4;
    static constexpr unsigned kMaxOrder = 1u << kMaxDegree;

    /// Field of order q with the standard modulus. Throws std::invalid_argument
    /// unless q is one of 2, 4, 8, 16.
    explicit Field(unsigned q);

    /// Field of order q with an explicit modulus (bitmask including the leading
    /// x^h term). The modulus must be irreducible of degree h.
    Field(unsigned q, unsigned modulus);

    static unsigned standard_modulus(unsigned degree);

    unsigned q() const noexcept { return q_; }
    unsigned degree() const noexcept { return degree_; }
    unsigned modulus() const noexcept { return modulus_; }

    static Elem add(Elem a, Elem b) noexcept { return static_cast<Elem>(a ^ b); }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[(static_cast<unsigned>(a) << 4) | b]; }
    Elem sqr(Elem a) const noexcept { return mul(a, a); }
    /// Throws std::domain_error for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// The unique square root, a^(2^(h-1)).
    Elem sqrt(Elem a) const noexcept { return sqrt_[a]; }
    /// Absolute trace to GF(2); returns 0 or 1.
    Elem trace(Elem a) const noexcept { return trace_[a]; }

    /// Smallest (in bit order) generator of the multiplicative group.
    Elem primitive_element() const noexcept { return primitive_; }
    /// Multiplicative order of a nonzero element.
    unsigned order(Elem a) const;
    bool is_cube(Elem a) const noexcept;

    /// All elements in canonical (ascending bitstring) order.
    std::vector<Elem> elements() const;

    bool contains(unsigned value) const noexcept { return value < q_; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.q_ == b.q_ && a.modulus_ == b.modulus_;
    }

   private:
    unsigned q_;
    unsigned degree_;
    unsigned modulus_;
    Elem primitive_ = 1;
    std::array<Elem, kMaxOrder * kMaxOrder> mul_{};
    std::array<Elem, kMaxOrder> inv_{};
    std::array<Elem, kMaxOrder> sqrt_{};
    std::array<Elem, kMaxOrder> trace_{};
};

/// Carry-less product of a and b reduced modulo `modulus` (degree h).
Elem clmul_mod(unsigned a, unsigned b, unsigned modulus, unsigned degree) noexcept;

/// Irreducibility over GF(2) of a polynomial of degree <= 8 given as a bitmask.
bool is_irreducible_gf2(unsigned poly) noexcept;

/// Roots in GF(q) of alpha*x^2 + beta*x + gamma (alpha != 0), ascending.
/// Root count follows the trace criterion: one root iff beta = 0, two iff
/// beta != 0 and Tr(alpha*gamma/beta^2) = 0, none otherwise.
/// Throws std::invalid_argument when alpha = 0.
std::vector<Elem> solve_quadratic(const Field& field, Elem alpha, Elem beta, Elem gamma);

/// First nonzero gamma (ascending) with Tr(1/gamma) = 1.
Elem find_gamma_inv_trace(const Field& field);

/// First nonzero gamma (ascending) with Tr(gamma) = 1.
Elem find_gamma_trace(const Field& field);

struct CubicParams {
    Elem b = 0;
    Elem c = 0;
    friend bool operator==(const CubicParams&, const CubicParams&) = default;
};

/// True when b*x^3 + c*x + 1 has no root in the field.
bool cubic_is_rootless(const Field& field, Elem b, Elem c) noexcept;

/// First (b, c), b != 0, in lexicographic (b, c) order for which
/// b*x^3 + c*x + 1 has no root (hence is irreducible, being a cubic).
CubicParams find_irreducible_cubic_params(const Field& field);

/// Lowercase hex digit of an element.
char to_hex(Elem a) noexcept;

/// Parses one hex digit; throws std::invalid_argument if it is not a digit or
/// not an element of `field`.
Elem parse_hex_elem(char digit, const Field& field);

}  // namespace pencils

#endif  // PENCILS_FIELD_HPP
