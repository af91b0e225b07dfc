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

#ifndef PENCILS_VERONESE_HPP
#define PENCILS_VERONESE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pencils/field.hpp"
#include "pencils/projgeom.hpp"

namespace pencils {

/// 3x3 matrix over GF(q), row-major.
using Mat3 = std::array<Vec3, 3>;

Mat3 identity3() noexcept;
Mat3 multiply(const Field& field, const Mat3& a, const Mat3& b) noexcept;
Mat3 transpose(const Mat3& a) noexcept;
Elem det(const Field& field, const Mat3& a) noexcept;
Vec3 apply(const Field& field, const Mat3& a, const Vec3& v) noexcept;
/// Throws std::domain_error when a is singular.
Mat3 inverse(const Field& field, const Mat3& a);
/// Rank by Gaussian elimination.
unsigned rank(const Field& field, const Mat3& a);

/// Position of entry (i, j) of a symmetric 3x3 matrix in the PG(5,q)
/// coordinate order (m00, m01, m02, m11, m12, m22).
constexpr std::size_t sym_index(std::size_t i, std::size_t j) noexcept {
    constexpr std::size_t table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return table[i][j];
}

/// A symmetric 3x3 matrix; its entries are exactly the coordinates
/// (Y0..Y5) of a point of PG(5,q).
struct SymMat3 {
    Vec6 y{};

    Elem at(std::size_t i, std::size_t j) const noexcept { return y[sym_index(i, j)]; }
    Mat3 full() const noexcept;
    /// Throws std::invalid_argument if m is not symmetric.
    static SymMat3 from_full(const Mat3& m);

    friend bool operator==(const SymMat3&, const SymMat3&) = default;
};

/// The four K-orbits of points of PG(5,q), q even. The enumerator value is
/// the position in a point-orbit distribution [r1, r2n, r2s, r3].
enum class PointType : std::uint8_t { Rank1 = 0, Rank2Nucleus = 1, Rank2Secant = 2, Rank3 = 3 };

/// Conic types; the value is the position in a hyperplane-orbit distribution
/// [a1, a2r, a2i, a3].
enum class ConicKind : std::uint8_t { DoubleLine = 0, RealPair = 1, ImaginaryPair = 2, Nonsingular = 3 };

std::string_view to_string(PointType t) noexcept;
/// "L2", "R", "I" or "N".
std::string_view to_string(ConicKind k) noexcept;

/// (u0,u1,u2) -> (u0^2, u0u1, u0u2, u1^2, u1u2, u2^2).
Point5 nu(const Field& field, const Point2& p);

/// Inverse of nu on rank-1 points. Throws std::invalid_argument otherwise.
Point2 nu_inverse(const Field& field, const Point5& p);

/// Rank of M_P plus the nucleus-plane test for rank 2 (zero diagonal).
/// Throws on the zero vector.
PointType point_type(const Field& field, const Vec6& y);
inline PointType point_type(const Field& field, const Point5& p) { return point_type(field, p.coords()); }

/// a00 a12^2 + a11 a02^2 + a22 a01^2 + a01 a02 a12; a conic is nonsingular iff
/// this is nonzero.
Elem discriminant(const Field& field, const Vec6& a) noexcept;

/**
 * @brief A conic Z(sum a_ij X_i X_j) of PG(2,q).
 *
 * Coefficients are ordered (a00, a01, a02, a11, a12, a22) and scaled so the
 * first nonzero one is 1, so that each conic has one representative and its
 * coefficient vector is the normalized coordinate vector of delta(conic).
 */
class Conic {
   public:
    Conic(const Field& field, const Vec6& coeffs);

    const Vec6& coeffs() const noexcept { return coeffs_; }
    Elem evaluate(const Field& field, const Vec3& x) const noexcept;

    friend bool operator==(const Conic&, const Conic&) = default;
    friend auto operator<=>(const Conic&, const Conic&) = default;

   private:
    Vec6 coeffs_;
};

/// Value of the quadratic form with coefficient vector a at x.
Elem evaluate_form(const Field& field, const Vec6& a, const Vec3& x) noexcept;

/// Discriminant test plus the algebraic line-pair split: a line pair with
/// vertex N is restricted to a coordinate line missing N and the resulting
/// binary quadratic is solved with the trace criterion.
ConicKind classify_conic(const Field& field, const Vec6& coeffs);
inline ConicKind classify_conic(const Field& field, const Conic& c) { return classify_conic(field, c.coeffs()); }

/// Rational points of the conic (normalized), in enumeration order of PG(2,q).
std::vector<Point2> conic_points(const Field& field, const Conic& c);

/// Classification from the rational point set alone: 1 point -> imaginary
/// pair, 2q+1 -> real pair, q+1 collinear -> double line, q+1 otherwise ->
/// nonsingular.
ConicKind classify_conic_by_points(const Field& field, const Conic& c);

/// The hyperplane Z(sum a_ij Y_k) of PG(5,q).
Subspace<6> delta(const Field& field, const Conic& c);
/// Inverse of delta; throws std::invalid_argument unless h is a hyperplane.
Conic delta_inv(const Field& field, const Subspace<6>& h);

/**
 * @brief The projectivity of PG(5,q) induced by A in GL(3,q): M -> A M A^T.
 *
 * Held as the 6x6 matrix of the linear map on coordinates (Y0..Y5).
 */
class Lift {
   public:
    /// Throws std::domain_error if A is singular.
    Lift(const Field& field, const Mat3& a);

    const Mat3& matrix() const noexcept { return a_; }
    Vec6 apply(const Vec6& y) const noexcept;
    Point5 apply(const Point5& p) const { return Point5(*field_, apply(p.coords())); }
    Subspace<6> apply(const Subspace<6>& s) const;

   private:
    const Field* field_;
    Mat3 a_;
    std::array<Vec6, 6> columns_{};
};

/// The image of the conic under u -> A u, i.e. the conic c(A^{-1} X).
Conic transform(const Field& field, const Mat3& a, const Conic& c);

/**
 * @brief Per-field lookup tables of point type and conic kind, indexed by the
 * packed coordinate word of any nonzero vector (both are scale invariant).
 *
 * Built eagerly: q^6 entries each, so 256 KiB at q=8 and 16 MiB at q=16.
 */
class Geometry {
   public:
    explicit Geometry(const Field& field);

    const Field& field() const noexcept { return field_; }
    unsigned q() const noexcept { return field_.q(); }
    unsigned bits() const noexcept { return field_.degree(); }

    PointType point_type(std::uint32_t packed) const noexcept { return point_types_[packed]; }
    PointType point_type(const Vec6& y) const noexcept { return point_types_[pack(y, bits())]; }
    ConicKind conic_kind(std::uint32_t packed) const noexcept { return conic_kinds_[packed]; }
    ConicKind conic_kind(const Vec6& a) const noexcept { return conic_kinds_[pack(a, bits())]; }

    /// packed(c * v) for a packed vector.
    std::uint32_t scale_packed(Elem c, std::uint32_t packed) const noexcept;

   private:
    Field field_;
    std::vector<PointType> point_types_;
    std::vector<ConicKind> conic_kinds_;
};

/// Hex form of a 3x3 matrix: 9 digits, row-major.
std::string to_hex(const Mat3& a);
Mat3 parse_hex_mat3(std::string_view text, const Field& field);

}  // namespace pencils

#endif  // PENCILS_VERONESE_HPP
