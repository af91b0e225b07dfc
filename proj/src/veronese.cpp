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

#include "pencils/veronese.hpp"

#include <stdexcept>

namespace pencils {

Mat3 identity3() noexcept { return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}; }

Mat3 multiply(const Field& field, const Mat3& a, const Mat3& b) noexcept {
    Mat3 c{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Elem acc = 0;
            for (std::size_t k = 0; k < 3; ++k) acc ^= field.mul(a[i][k], b[k][j]);
            c[i][j] = acc;
        }
    return c;
}

Mat3 transpose(const Mat3& a) noexcept {
    Mat3 t{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t[i][j] = a[j][i];
    return t;
}

Elem det(const Field& f, const Mat3& a) noexcept {
    // char 2: the signed terms all add
    return f.mul(a[0][0], f.mul(a[1][1], a[2][2]) ^ f.mul(a[1][2], a[2][1])) ^
           f.mul(a[0][1], f.mul(a[1][0], a[2][2]) ^ f.mul(a[1][2], a[2][0])) ^
           f.mul(a[0][2], f.mul(a[1][0], a[2][1]) ^ f.mul(a[1][1], a[2][0]));
}

Vec3 apply(const Field& field, const Mat3& a, const Vec3& v) noexcept {
    return {dot(field, a[0], v), dot(field, a[1], v), dot(field, a[2], v)};
}

Mat3 inverse(const Field& f, const Mat3& a) {
    const Elem d = det(f, a);
    if (d == 0) throw std::domain_error("matrix is singular");
    const Elem di = f.inv(d);
    Mat3 adj{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            // cofactor of a[j][i]
            const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = f.mul(di, f.mul(a[r0][c0], a[r1][c1]) ^ f.mul(a[r0][c1], a[r1][c0]));
        }
    return adj;
}

unsigned rank(const Field& field, const Mat3& a) {
    std::array<Vec3, 3> rows = a;
    return static_cast<unsigned>(rref(field, rows, 3));
}

Mat3 SymMat3::full() const noexcept {
    Mat3 m{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = at(i, j);
    return m;
}

SymMat3 SymMat3::from_full(const Mat3& m) {
    SymMat3 s;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");
            s.y[sym_index(i, j)] = m[i][j];
        }
    return s;
}

std::string_view to_string(PointType t) noexcept {
    switch (t) {
        case PointType::Rank1:
            return "rank1";
        case PointType::Rank2Nucleus:
            return "rank2-nucleus";
        case PointType::Rank2Secant:
            return "rank2-secant";
        case PointType::Rank3:
            return "rank3";
    }
    return "?";
}

std::string_view to_string(ConicKind k) noexcept {
    switch (k) {
        case ConicKind::DoubleLine:
            return "L2";
        case ConicKind::RealPair:
            return "R";
        case ConicKind::ImaginaryPair:
            return "I";
        case ConicKind::Nonsingular:
            return "N";
    }
    return "?";
}

Point5 nu(const Field& f, const Point2& p) {
    const auto& u = p.coords();
    return Point5(f, Vec6{f.sqr(u[0]), f.mul(u[0], u[1]), f.mul(u[0], u[2]), f.sqr(u[1]), f.mul(u[1], u[2]),
                          f.sqr(u[2])});
}

Point2 nu_inverse(const Field& f, const Point5& p) {
    if (point_type(f, p) != PointType::Rank1) throw std::invalid_argument("point is not on the Veronese surface");
    const SymMat3 m{p.coords()};
    // M = u u^T up to scalar, and some diagonal entry u_i^2 is nonzero
    for (std::size_t i = 0; i < 3; ++i)
        if (m.at(i, i) != 0) return Point2(f, Vec3{m.at(i, 0), m.at(i, 1), m.at(i, 2)});
    throw std::logic_error("rank-1 symmetric matrix with zero diagonal");
}

PointType point_type(const Field& field, const Vec6& y) {
    if (is_zero(y)) throw std::invalid_argument("point_type of the zero vector");
    const SymMat3 m{y};
    switch (rank(field, m.full())) {
        case 1:
            return PointType::Rank1;
        case 2:
            return (y[0] == 0 && y[3] == 0 && y[5] == 0) ? PointType::Rank2Nucleus : PointType::Rank2Secant;
        default:
            return PointType::Rank3;
    }
}

Elem discriminant(const Field& f, const Vec6& a) noexcept {
    const Elem a00 = a[0], a01 = a[1], a02 = a[2], a11 = a[3], a12 = a[4], a22 = a[5];
    return f.mul(a00, f.sqr(a12)) ^ f.mul(a11, f.sqr(a02)) ^ f.mul(a22, f.sqr(a01)) ^ f.mul(a01, f.mul(a02, a12));
}

Conic::Conic(const Field& field, const Vec6& coeffs) : coeffs_(normalize(field, coeffs)) {}

Elem evaluate_form(const Field& f, const Vec6& a, const Vec3& x) noexcept {
    Elem acc = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) acc ^= f.mul(a[sym_index(i, j)], f.mul(x[i], x[j]));
    return acc;
}

Elem Conic::evaluate(const Field& field, const Vec3& x) const noexcept { return evaluate_form(field, coeffs_, x); }

ConicKind classify_conic(const Field& field, const Vec6& a) {
    if (is_zero(a)) throw std::invalid_argument("classify_conic: zero form");
    if (discriminant(field, a) != 0) return ConicKind::Nonsingular;
    if (a[1] == 0 && a[2] == 0 && a[4] == 0) return ConicKind::DoubleLine;

    // Vertex N = (a12, a02, a01); N_k is the cross coefficient a_ij of the
    // coordinate line X_k = 0, so that line misses N exactly when a_ij != 0.
    const std::array<std::array<std::size_t, 2>, 3> complement = {{{1, 2}, {0, 2}, {0, 1}}};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto [i, j] = complement[k];
        const Elem beta = a[sym_index(i, j)];
        if (beta == 0) continue;
        const Elem alpha = a[sym_index(i, i)];
        const Elem gamma = a[sym_index(j, j)];
        // restricted form alpha s^2 + beta s t + gamma t^2 has distinct roots;
        // with alpha = 0 one of them is t = 0
        if (alpha == 0) return ConicKind::RealPair;
        return solve_quadratic(field, alpha, beta, gamma).size() == 2 ? ConicKind::RealPair
                                                                       : ConicKind::ImaginaryPair;
    }
    throw std::logic_error("classify_conic: unreachable");
}

std::vector<Point2> conic_points(const Field& field, const Conic& c) {
    std::vector<Point2> out;
    for_each_point(field, Subspace<3>::whole(field), [&](const Vec3& x) {
        if (c.evaluate(field, x) == 0) out.push_back(Point2::from_normalized(x));
    });
    return out;
}

ConicKind classify_conic_by_points(const Field& field, const Conic& c) {
    const auto pts = conic_points(field, c);
    const std::size_t q = field.q();
    if (pts.size() == 1) return ConicKind::ImaginaryPair;
    if (pts.size() == 2 * q + 1) return ConicKind::RealPair;
    if (pts.size() != q + 1) throw std::logic_error("conic with an impossible number of rational points");
    for (std::size_t i = 2; i < pts.size(); ++i) {
        const Mat3 m{pts[0].coords(), pts[1].coords(), pts[i].coords()};
        if (det(field, m) != 0) return ConicKind::Nonsingular;
    }
    return ConicKind::DoubleLine;
}

Subspace<6> delta(const Field& field, const Conic& c) {
    return annihilator(field, Subspace<6>::span(field, {c.coeffs()}));
}

Conic delta_inv(const Field& field, const Subspace<6>& h) {
    if (h.rank() != 5) throw std::invalid_argument("delta_inv: subspace is not a hyperplane");
    return Conic(field, annihilator(field, h).row(0));
}

Lift::Lift(const Field& field, const Mat3& a) : field_(&field), a_(a) {
    if (det(field, a) == 0) throw std::domain_error("Lift: matrix is singular");
    const Mat3 at = transpose(a);
    for (std::size_t k = 0; k < 6; ++k) {
        SymMat3 e;
        e.y[k] = 1;
        const Mat3 image = multiply(field, multiply(field, a, e.full()), at);
        columns_[k] = SymMat3::from_full(image).y;
    }
}

Vec6 Lift::apply(const Vec6& y) const noexcept {
    Vec6 out{};
    for (std::size_t k = 0; k < 6; ++k)
        if (y[k] != 0) out = out + scale(*field_, y[k], columns_[k]);
    return out;
}

Subspace<6> Lift::apply(const Subspace<6>& s) const {
    std::array<Vec6, 6> rows{};
    for (std::size_t r = 0; r < s.rank(); ++r) rows[r] = apply(s.row(r));
    return Subspace<6>::span(*field_, std::span<const Vec6>(rows.data(), s.rank()));
}

Conic transform(const Field& f, const Mat3& a, const Conic& c) {
    const Mat3 b = inverse(f, a);
    Vec6 out{};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = k; l < 3; ++l) {
            const Elem ckl = c.coeffs()[sym_index(k, l)];
            if (ckl == 0) continue;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i; j < 3; ++j) {
                    const Elem term = i == j ? f.mul(b[k][i], b[l][i])
                                             : static_cast<Elem>(f.mul(b[k][i], b[l][j]) ^ f.mul(b[k][j], b[l][i]));
                    out[sym_index(i, j)] ^= f.mul(ckl, term);
                }
        }
    return Conic(f, out);
}

Geometry::Geometry(const Field& field) : field_(field) {
    const std::uint32_t size = 1u << (6 * field_.degree());
    point_types_.assign(size, PointType::Rank3);
    conic_kinds_.assign(size, ConicKind::Nonsingular);
    for (std::uint32_t w = 1; w < size; ++w) {
        const Vec6 v = unpack<6>(w, field_.degree());
        point_types_[w] = pencils::point_type(field_, v);
        conic_kinds_[w] = classify_conic(field_, v);
    }
}

std::uint32_t Geometry::scale_packed(Elem c, std::uint32_t packed) const noexcept {
    return pack(scale(field_, c, unpack<6>(packed, bits())), bits());
}

std::string to_hex(const Mat3& a) {
    std::string out;
    for (const auto& row : a) out += to_hex(row);
    return out;
}

Mat3 parse_hex_mat3(std::string_view text, const Field& field) {
    if (text.size() != 9) throw std::invalid_argument("a 3x3 matrix needs 9 hex digits");
    Mat3 m{};
    for (std::size_t r = 0; r < 3; ++r) m[r] = parse_hex_vec<3>(text.substr(3 * r, 3), field);
    return m;
}

}  // namespace pencils
