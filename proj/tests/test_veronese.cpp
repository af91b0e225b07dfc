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

#include <random>
#include <set>
#include <stdexcept>

#include "pencils/veronese.hpp"
#include "table_oracle.hpp"

using namespace pencils;

namespace {

Mat3 random_invertible(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    while (true) {
        Mat3 a;
        for (auto& row : a)
            for (auto& e : row) e = Elem(d(rng));
        if (det(f, a) != 0) return a;
    }
}

// rank of a 3x3 matrix from the size of its kernel: |ker| = q^(3 - rank)
unsigned kernel_rank(const Field& f, const Mat3& m) {
    const unsigned q = f.q();
    unsigned kernel = 0;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                if (is_zero(apply(f, m, Vec3{Elem(a), Elem(b), Elem(c)}))) ++kernel;
    unsigned r = 3;
    while (kernel > 1) kernel /= q, --r;
    return r;
}

Mat3 sym_full(const Vec6& y) {
    return Mat3{Vec3{y[0], y[1], y[2]}, Vec3{y[1], y[3], y[4]}, Vec3{y[2], y[4], y[5]}};
}

// sum a_ij x_i x_j written out by hand
Elem form_value(const Field& f, const Vec6& a, const Vec3& x) {
    const auto m = [&](Elem u, Elem v) { return f.mul(u, v); };
    return Elem(m(a[0], m(x[0], x[0])) ^ m(a[1], m(x[0], x[1])) ^ m(a[2], m(x[0], x[2])) ^ m(a[3], m(x[1], x[1])) ^
                m(a[4], m(x[1], x[2])) ^ m(a[5], m(x[2], x[2])));
}

unsigned rational_points(const Field& f, const Vec6& a) {
    unsigned n = 0;
    for (const auto& p : all_points<3>(f))
        if (form_value(f, a, p.coords()) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("nu examples") {
    const Field f2(2), f4(4);
    CHECK(nu(f2, Point2(f2, Vec3{1, 0, 0})).coords() == Vec6{1, 0, 0, 0, 0, 0});
    CHECK(nu(f2, Point2(f2, Vec3{1, 1, 1})).coords() == Vec6{1, 1, 1, 1, 1, 1});
    CHECK(nu(f4, Point2(f4, Vec3{1, 2, 3})).coords() == Vec6{1, 2, 3, 3, 1, 2});
}

TEST_CASE("nu is injective onto the rank-1 points") {
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        std::set<Point5> image;
        for (const auto& p : all_points<3>(f)) {
            const Point5 v = nu(f, p);
            CHECK(point_type(f, v) == PointType::Rank1);
            CHECK(nu_inverse(f, v) == p);
            image.insert(v);
        }
        CHECK(image.size() == q * q + q + 1);
        for (const auto& y : all_points<6>(f))
            CHECK((point_type(f, y) == PointType::Rank1) == (image.count(y) == 1));
        CHECK_THROWS_AS(nu_inverse(f, Point5(f, Vec6{0, 1, 0, 0, 0, 0})), std::invalid_argument);
    }
}

TEST_CASE("point types against kernel ranks") {
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        for (const auto& p : all_points<6>(f)) {
            const Vec6& y = p.coords();
            const unsigned r = kernel_rank(f, sym_full(y));
            CHECK(rank(f, sym_full(y)) == r);
            const bool zero_diag = y[0] == 0 && y[3] == 0 && y[5] == 0;
            const PointType expected = r == 1   ? PointType::Rank1
                                       : r == 3 ? PointType::Rank3
                                       : zero_diag ? PointType::Rank2Nucleus
                                                   : PointType::Rank2Secant;
            REQUIRE(point_type(f, y) == expected);
        }
    }
    const Field f(2);
    CHECK(point_type(f, Vec6{1, 0, 0, 0, 0, 0}) == PointType::Rank1);
    CHECK(point_type(f, Vec6{0, 1, 0, 0, 0, 0}) == PointType::Rank2Nucleus);
    CHECK_THROWS(point_type(f, Vec6{}));
}

TEST_CASE("point census of PG(5,q)") {
    for (unsigned q : {2u, 4u, 8u}) {
        const Field f(q);
        const Geometry g(f);
        oracle::Quad counts{};
        for (const auto& p : all_points<6>(f)) {
            ++counts[std::size_t(point_type(f, p))];
            CHECK(g.point_type(p.coords()) == point_type(f, p));
        }
        CHECK(counts == oracle::point_census(q));
    }
}

TEST_CASE("conic kinds against rational point counts") {
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        const Geometry g(f);
        oracle::Quad counts{};
        for (const auto& p : all_points<6>(f)) {
            const Vec6& a = p.coords();
            const Conic c(f, a);
            const unsigned n = rational_points(f, a);
            const bool square = a[1] == 0 && a[2] == 0 && a[4] == 0;
            const ConicKind expected = square         ? ConicKind::DoubleLine
                                       : n == 2 * q + 1 ? ConicKind::RealPair
                                       : n == 1         ? ConicKind::ImaginaryPair
                                                        : ConicKind::Nonsingular;
            if (expected == ConicKind::Nonsingular || square) CHECK(n == q + 1);
            REQUIRE(classify_conic(f, c) == expected);
            CHECK(classify_conic_by_points(f, c) == expected);
            CHECK(g.conic_kind(a) == expected);
            CHECK(conic_points(f, c).size() == n);
            CHECK((discriminant(f, a) != 0) == (expected == ConicKind::Nonsingular));
            ++counts[std::size_t(expected)];
        }
        CHECK(counts == oracle::hyperplane_census(q));
    }
}

TEST_CASE("conic kinds at q=8 and q=16 agree with point counting on a sample") {
    std::mt19937 rng(8);
    for (unsigned q : {8u, 16u}) {
        const Field f(q);
        std::uniform_int_distribution<unsigned> d(0, q - 1);
        for (int t = 0; t < 400; ++t) {
            Vec6 a;
            for (auto& e : a) e = Elem(d(rng));
            if (t % 4 == 0) a[0] = a[3] = a[5] = 0, a[1] = Elem(1 + d(rng) % (q - 1));
            if (t % 4 == 1) {  // force a singular conic: a product of two linear forms
                const Vec3 l{Elem(d(rng)), Elem(d(rng)), 1}, m{1, Elem(d(rng)), Elem(d(rng))};
                a = {f.mul(l[0], m[0]), Elem(f.mul(l[0], m[1]) ^ f.mul(l[1], m[0])),
                     Elem(f.mul(l[0], m[2]) ^ f.mul(l[2], m[0])), f.mul(l[1], m[1]),
                     Elem(f.mul(l[1], m[2]) ^ f.mul(l[2], m[1])), f.mul(l[2], m[2])};
            }
            if (is_zero(a)) continue;
            const Conic c(f, a);
            CHECK(classify_conic(f, c) == classify_conic_by_points(f, c));
        }
    }
}

TEST_CASE("conic kind examples") {
    const Field f2(2), f4(4);
    CHECK(classify_conic(f4, Conic(f4, Vec6{0, 1, 0, 0, 0, 1})) == ConicKind::Nonsingular);
    CHECK(classify_conic(f4, Conic(f4, Vec6{0, 0, 0, 0, 0, 1})) == ConicKind::DoubleLine);
    CHECK(classify_conic(f2, Conic(f2, Vec6{1, 1, 0, 1, 0, 0})) == ConicKind::ImaginaryPair);
    CHECK(classify_conic(f4, Conic(f4, Vec6{0, 1, 0, 0, 0, 0})) == ConicKind::RealPair);
    CHECK(to_string(ConicKind::Nonsingular) == "N");
    CHECK(to_string(ConicKind::DoubleLine) == "L2");
    CHECK(to_string(ConicKind::RealPair) == "R");
    CHECK(to_string(ConicKind::ImaginaryPair) == "I");
    CHECK(discriminant(f4, Vec6{0, 1, 0, 0, 0, 1}) == 1);
    CHECK_THROWS(Conic(f4, Vec6{}));
    CHECK(Conic(f4, Vec6{0, 2, 0, 0, 0, 2}).coeffs() == Vec6{0, 1, 0, 0, 0, 1});
}

TEST_CASE("delta: incidence and inverse") {
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        const auto pts = all_points<3>(f);
        for (const auto& h : all_points<6>(f)) {
            const Conic c(f, h.coords());
            const Subspace<6> H = delta(f, c);
            CHECK(H.rank() == 5);
            CHECK(delta_inv(f, H) == c);
            for (const auto& p : pts)
                CHECK((evaluate_form(f, c.coeffs(), p.coords()) == 0) == H.contains(f, nu(f, p).coords()));
        }
    }
    const Field f8(8);
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        Vec6 a;
        for (auto& e : a) e = Elem(rng() % 8);
        if (is_zero(a)) continue;
        const Conic c(f8, a);
        CHECK(delta_inv(f8, delta(f8, c)) == c);
    }
    const Field f(4);
    const auto y5 = delta(f, Conic(f, Vec6{0, 0, 0, 0, 0, 1}));
    for_each_point(f, y5, [&](const Vec6& v) { CHECK(v[5] == 0); });
    const auto h = delta(f, Conic(f, Vec6{0, 1, 0, 0, 0, 1}));
    for_each_point(f, h, [&](const Vec6& v) { CHECK(v[1] == v[5]); });
    CHECK_THROWS_AS(delta_inv(f, Subspace<6>::span(f, {Vec6{1, 0, 0, 0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("lift acts as M -> A M A^T") {
    std::mt19937 rng(6);
    for (unsigned q : {2u, 4u, 8u}) {
        const Field f(q);
        for (int t = 0; t < 30; ++t) {
            const Mat3 a = random_invertible(f, rng);
            const Lift l(f, a);
            for (int s = 0; s < 20; ++s) {
                Vec6 y;
                for (auto& e : y) e = Elem(rng() % q);
                const Mat3 m = multiply(f, multiply(f, a, sym_full(y)), transpose(a));
                CHECK(sym_full(l.apply(y)) == m);
            }
        }
    }
}

TEST_CASE("lift is a homomorphism and commutes with nu") {
    std::mt19937 rng(7);
    const Field f(4);
    const auto pts = all_points<3>(f);
    for (int t = 0; t < 50; ++t) {
        const Mat3 a = random_invertible(f, rng), b = random_invertible(f, rng);
        const Lift la(f, a), lb(f, b), lab(f, multiply(f, a, b));
        for (int s = 0; s < 10; ++s) {
            Vec6 y;
            for (auto& e : y) e = Elem(rng() % 4);
            CHECK(la.apply(lb.apply(y)) == lab.apply(y));
        }
        for (const auto& p : pts) CHECK(la.apply(nu(f, p)) == nu(f, Point2(f, apply(f, a, p.coords()))));
    }
    const Field f2(2);
    const Mat3 swap12{Vec3{1, 0, 0}, Vec3{0, 0, 1}, Vec3{0, 1, 0}};
    const Mat3 swap01{Vec3{0, 1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}};
    CHECK(Lift(f2, swap01).apply(nu(f2, Point2(f2, Vec3{1, 0, 0}))) == nu(f2, Point2(f2, Vec3{0, 1, 0})));
    CHECK(Lift(f2, swap12).apply(Vec6{1, 0, 0, 0, 0, 0}) == Vec6{1, 0, 0, 0, 0, 0});
    CHECK(Lift(f2, identity3()).apply(Vec6{1, 1, 0, 1, 0, 1}) == Vec6{1, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(Lift(f2, Mat3{Vec3{1, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}}), std::domain_error);
}

TEST_CASE("lift preserves point types and subspaces") {
    std::mt19937 rng(9);
    for (unsigned q : {2u, 4u}) {
        const Field f(q);
        const auto all = all_points<6>(f);
        for (int t = 0; t < 5; ++t) {
            const Lift l(f, random_invertible(f, rng));
            for (const auto& p : all) CHECK(point_type(f, l.apply(p)) == point_type(f, p));
            const auto s = Subspace<6>::span(f, {all[rng() % all.size()].coords(), all[rng() % all.size()].coords(),
                                                 all[rng() % all.size()].coords()});
            const auto image = l.apply(s);
            CHECK(image.rank() == s.rank());
            for_each_point(f, s, [&](const Vec6& v) { CHECK(image.contains(f, l.apply(v))); });
        }
    }
}

TEST_CASE("conic transform matches the lifted hyperplane") {
    std::mt19937 rng(10);
    for (unsigned q : {2u, 4u, 8u}) {
        const Field f(q);
        const auto pts = all_points<3>(f);
        for (int t = 0; t < 40; ++t) {
            const Mat3 a = random_invertible(f, rng);
            Vec6 v;
            for (auto& e : v) e = Elem(rng() % q);
            if (is_zero(v)) continue;
            const Conic c(f, v);
            const Conic image = transform(f, a, c);
            CHECK(Lift(f, a).apply(delta(f, c)) == delta(f, image));
            CHECK((discriminant(f, c.coeffs()) == 0) == (discriminant(f, image.coeffs()) == 0));
            CHECK(classify_conic(f, image) == classify_conic(f, c));
            for (const auto& p : pts)
                CHECK((c.evaluate(f, p.coords()) == 0) == (image.evaluate(f, apply(f, a, p.coords())) == 0));
        }
    }
}

TEST_CASE("matrix helpers") {
    std::mt19937 rng(11);
    const Field f(8);
    for (int t = 0; t < 50; ++t) {
        const Mat3 a = random_invertible(f, rng);
        CHECK(multiply(f, a, inverse(f, a)) == identity3());
        CHECK(rank(f, a) == 3);
        CHECK(parse_hex_mat3(to_hex(a), f) == a);
        CHECK(to_hex(a).size() == 9);
    }
    CHECK_THROWS_AS(inverse(f, Mat3{}), std::domain_error);
    CHECK(rank(f, Mat3{}) == 0);
    const SymMat3 s{Vec6{1, 2, 3, 4, 5, 6}};
    CHECK(s.full() == sym_full(s.y));
    CHECK(SymMat3::from_full(s.full()) == s);
    CHECK(s.at(2, 1) == 5);
    CHECK_THROWS_AS(SymMat3::from_full(Mat3{Vec3{0, 1, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}}), std::invalid_argument);
}
