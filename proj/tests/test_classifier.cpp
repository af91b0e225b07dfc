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

#include "pencils/classifier.hpp"
#include "pencils/group.hpp"
#include "pencils/verify.hpp"
#include "table_oracle.hpp"

using namespace pencils;

namespace {

oracle::Quad quad(const std::array<std::uint32_t, 4>& a) { return {a[0], a[1], a[2], a[3]}; }

Mat3 random_invertible(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    while (true) {
        Mat3 a;
        for (auto& row : a)
            for (auto& e : row) e = Elem(d(rng));
        if (det(f, a) != 0) return a;
    }
}

}  // namespace

TEST_CASE("expected table against the written-out closed forms") {
    for (unsigned q : {2u, 4u, 8u, 16u}) {
        const auto table = expected_table(q);
        const auto rows = oracle::table(q);
        REQUIRE(table.size() == 15);
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < 15; ++i) {
            INFO("row " << i + 1 << " q " << q);
            CHECK(table[i].label == i + 1);
            CHECK(quad(table[i].point_od) == rows[i].point_od);
            CHECK(quad(table[i].hyperplane_od) == rows[i].hyperplane_od);
            CHECK(table[i].stabilizer_order == rows[i].stabilizer);
            CHECK(table[i].orbit_size == rows[i].orbit);
            CHECK(table[i].stabilizer_order * table[i].orbit_size == pgl3_order(q));
            CHECK_FALSE(table[i].structure.empty());
            sum += table[i].orbit_size;
        }
        CHECK(sum == gaussian_count(6, 4, q));
        CHECK(pgl3_order(q) == oracle::group_order(q));
    }
    const auto t2 = expected_table(2);
    CHECK(quad(t2[0].point_od) == oracle::Quad{1, 3, 7, 4});
    CHECK(quad(t2[0].hyperplane_od) == oracle::Quad{1, 1, 1, 0});
    CHECK(t2[0].orbit_size == 21);
    const auto t4 = expected_table(4);
    CHECK(quad(t4[5].hyperplane_od) == oracle::Quad{1, 1, 0, 3});
    CHECK(t4[5].orbit_size == 3360);
    CHECK_THROWS_AS(expected_table(3), std::invalid_argument);
    CHECK_THROWS_AS(expected_table(32), std::invalid_argument);
}

TEST_CASE("OD-pair collisions") {
    using P = std::vector<std::pair<OrbitLabel, OrbitLabel>>;
    CHECK(od_collisions(expected_table(2)) == P{{4, 9}, {11, 12}});
    CHECK(od_collisions(expected_table(4)) == P{{11, 12}});
    CHECK(od_collisions(expected_table(8)) == P{{11, 12}});
    CHECK(od_collisions(expected_table(16)) == P{{11, 12}});
    for (unsigned q : {2u, 4u, 8u})
        for (const auto& row : expected_table(q)) {
            const bool tie = row.label == 11 || row.label == 12 || (q == 2 && (row.label == 4 || row.label == 9));
            CHECK(row.tie_break == tie);
        }
}

TEST_CASE("labels") {
    CHECK(label_name(9) == "Omega_9");
    CHECK_NOTHROW(check_label(1));
    CHECK_NOTHROW(check_label(15));
    CHECK_THROWS_AS(check_label(0), std::invalid_argument);
    CHECK_THROWS_AS(check_label(16), std::invalid_argument);
}

TEST_CASE("representatives classify as themselves") {
    for (unsigned q : {2u, 4u, 8u}) {
        const Classifier c{Field(q)};
        for (OrbitLabel l = 1; l <= 15; ++l) CHECK(c.classify(representative(c.field(), l)).label == l);
    }
    const Classifier c2{Field(2)};
    const Field& f = c2.field();
    const Solid s = Solid::span(f, {Vec6{1, 0, 0, 0, 0, 0}, Vec6{0, 1, 0, 0, 0, 0}, Vec6{0, 0, 1, 0, 0, 0},
                                    Vec6{0, 0, 0, 1, 0, 0}});
    CHECK(c2.classify(PencilSolid::from_solid(f, s)).label == 2);
}

TEST_CASE("labels are invariant under projectivities") {
    std::mt19937 rng(1);
    const Classifier c{Field(4)};
    const Field& f = c.field();
    const PencilSolid r13 = representative(f, 13);
    for (int t = 0; t < 50; ++t) {
        const Mat3 a = random_invertible(f, rng);
        const auto moved = PencilSolid::from_solid(f, Lift(f, a).apply(r13.solid));
        CHECK(c.classify(moved).label == 13);
    }
    CHECK(check_invariance(c, 300, 3, 2).pass);
    const Classifier c8{Field(8)};
    CHECK(check_invariance(c8, 100, 3, 3).pass);
}

TEST_CASE("unmatched distributions raise ClassificationInconsistency") {
    const Classifier c{Field(4)};
    const PencilSolid s = representative(c.field(), 1);
    OrbitDistributions bogus;
    bogus.point_od = {1, 2, 3, 79};
    bogus.hyperplane_od = {5, 0, 0, 0};
    CHECK_THROWS_AS(c.label_of(s, bogus), ClassificationInconsistency);
    try {
        c.label_of(s, bogus);
    } catch (const ClassificationInconsistency& e) {
        CHECK(e.solid() == serialize_solid(c.field(), s.solid));
        CHECK(std::string(e.what()).find(e.solid()) != std::string::npos);
    }
    // the 11/12 signature on a solid whose o6 count is off
    OrbitDistributions tie = c.classify(representative(c.field(), 11)).distributions;
    CHECK_THROWS(c.label_of(representative(c.field(), 1), tie));
}

TEST_CASE("exhaustive q=2 classification") {
    const Classifier c{Field(2)};
    const SweepTally t = classify_all(c, 1);
    CHECK(t.total == 651);
    CHECK(t.counts == std::array<std::uint64_t, 15>{21, 21, 7, 28, 42, 84, 28, 84, 7, 84, 84, 42, 21, 42, 56});
    CHECK(t.inconsistencies == 0);
    CHECK(t.double_line_imaginary_only == 0);
    const SweepTally t3 = classify_all(c, 3);
    CHECK(t3.counts == t.counts);
    CHECK(t3.singular_without_base == t.singular_without_base);
    CHECK(t3.singular_without_base_witness == t.singular_without_base_witness);
}

TEST_CASE("all-singular pencils without base points at q=2 are exactly the orbit of row 13") {
    // the q=2 row 13 has hyperplane-OD [0,1,2,0] and no rank-1 point, so
    // every solid of that orbit is such a pencil
    const Classifier c{Field(2)};
    const SweepTally t = classify_all(c, 1);
    CHECK(t.singular_without_base == 21);
    for (std::size_t i = 0; i < 15; ++i) CHECK(t.singular_without_base_by_label[i] == (i == 12 ? 21u : 0u));
    const ParsedSolid w = parse_solid(t.singular_without_base_witness);
    CHECK(c.classify(PencilSolid::from_solid(c.field(), w.solid)).label == 13);
    const Field& f = c.field();
    const PencilSolid r = representative(f, 13);
    for (const auto& m : pencil_members(f, r)) CHECK(classify_conic(f, m) != ConicKind::Nonsingular);
    CHECK(common_zeros(f, r).empty());
}

TEST_CASE("sampled sweeps are deterministic across thread counts") {
    const Classifier c{Field(8)};
    const SweepTally a = classify_sample(c, 3000, 11, 1);
    const SweepTally b = classify_sample(c, 3000, 11, 4);
    CHECK(a.counts == b.counts);
    CHECK(a.total == 3000);
    CHECK(a.inconsistencies == 0);
    CHECK(a.base_identity_failures == 0);
    CHECK(a.singular_without_base == 0);
    const SweepTally d = classify_sample(c, 3000, 12, 1);
    CHECK(d.counts != a.counts);
}

TEST_CASE("tally merge") {
    SweepTally a, b;
    a.counts[0] = 2;
    a.total = 2;
    b.counts[0] = 1;
    b.counts[3] = 4;
    b.total = 5;
    b.inconsistencies = 1;
    b.inconsistency_witness = "w";
    a.merge(b);
    CHECK(a.counts[0] == 3);
    CHECK(a.counts[3] == 4);
    CHECK(a.total == 7);
    CHECK(a.inconsistencies == 1);
    CHECK(a.inconsistency_witness == "w");
    SweepTally c;
    c.inconsistency_witness = "first";
    c.inconsistencies = 1;
    c.merge(b);
    CHECK(c.inconsistency_witness == "first");
}

TEST_CASE("results do not depend on the field's modulus") {
    // x^3 + x^2 + 1 instead of x^3 + x + 1
    const Classifier c{Field(8, 0b1101)};
    const Field& f = c.field();
    CHECK(check_representatives(c).pass);
    for (const auto& r : check_stabilizers(f, 1)) CHECK_MESSAGE(r.pass, r.name << ": " << r.detail);
    for (const auto& r : check_generators(c)) CHECK_MESSAGE(r.pass, r.name << ": " << r.detail);
    for (const auto& r : check_sampled(c, 5000, 5, 1)) CHECK_MESSAGE(r.pass, r.name << ": " << r.detail);
}
