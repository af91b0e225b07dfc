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

#include "pencils/pencil.hpp"

#include <algorithm>
#include <stdexcept>

namespace pencils {

namespace {

constexpr std::size_t kMaxTail = Field::kMaxOrder * Field::kMaxOrder * Field::kMaxOrder;

// Calls fn(word) for the packed normalized vector of each point of the span
// of `rows` (echelon rows, so the leading coefficient is already 1).
template <class Fn>
void for_each_packed_point(const Geometry& g, std::span<const Vec6> rows, Fn&& fn) {
    const unsigned q = g.q();
    const std::size_t k = rows.size();
    std::array<std::uint32_t, 6> packed{};
    for (std::size_t i = 0; i < k; ++i) packed[i] = pack(rows[i], g.bits());

    // tail holds every combination of rows lead+1..k-1, first row most significant
    std::array<std::uint32_t, kMaxTail> buffer_a;
    std::array<std::uint32_t, kMaxTail> buffer_b;
    std::uint32_t* tail = buffer_a.data();
    std::uint32_t* next = buffer_b.data();
    std::size_t tail_size = 1;
    tail[0] = 0;
    for (std::size_t lead = k; lead-- > 0;) {
        for (std::size_t t = 0; t < tail_size; ++t) fn(packed[lead] ^ tail[t]);
        if (lead == 0) break;
        // prepend row `lead` to the tail
        std::size_t n = 0;
        for (unsigned c = 0; c < q; ++c) {
            const std::uint32_t head = g.scale_packed(static_cast<Elem>(c), packed[lead]);
            for (std::size_t t = 0; t < tail_size; ++t) next[n++] = head ^ tail[t];
        }
        tail_size = n;
        std::swap(tail, next);
    }
}

}  // namespace

PencilSolid PencilSolid::from_solid(const Field& field, const Solid& s) {
    if (s.rank() != 4) throw std::invalid_argument("subspace is not a solid");
    return {s, annihilator(field, s), field.q()};
}

PencilSolid PencilSolid::from_pencil(const Field& field, const Subspace<6>& p) {
    if (p.rank() != 2) throw std::invalid_argument("subspace is not a pencil");
    return {annihilator(field, p), p, field.q()};
}

PencilSolid from_conics(const Field& field, const Conic& c1, const Conic& c2) {
    if (c1 == c2) throw std::invalid_argument("from_conics: the conics are proportional");
    return PencilSolid::from_pencil(field, Subspace<6>::span(field, {c1.coeffs(), c2.coeffs()}));
}

std::vector<Conic> pencil_members(const Field& field, const PencilSolid& s) {
    std::vector<Conic> out;
    out.reserve(field.q() + 1);
    for_each_point(field, s.pencil, [&](const Vec6& v) { out.emplace_back(field, v); });
    return out;
}

PointOD point_od_of(const Geometry& g, const Subspace<6>& s) {
    PointOD od{};
    for_each_packed_point(g, s.rows(), [&](std::uint32_t w) { ++od[static_cast<std::size_t>(g.point_type(w))]; });
    return od;
}

PointOD point_od(const Geometry& g, const Solid& s) { return point_od_of(g, s); }

PointOD point_od_reference(const Field& field, const Solid& s) {
    PointOD od{};
    for_each_point(field, s, [&](const Vec6& v) { ++od[static_cast<std::size_t>(point_type(field, v))]; });
    return od;
}

HyperplaneOD hyperplane_od(const Geometry& g, const PencilSolid& s) {
    HyperplaneOD od{};
    for_each_packed_point(g, s.pencil.rows(),
                          [&](std::uint32_t w) { ++od[static_cast<std::size_t>(g.conic_kind(w))]; });
    return od;
}

HyperplaneOD hyperplane_od_reference(const Field& field, const PencilSolid& s) {
    HyperplaneOD od{};
    for (const auto& c : pencil_members(field, s)) ++od[static_cast<std::size_t>(classify_conic_by_points(field, c))];
    return od;
}

OrbitDistributions distributions(const Geometry& g, const PencilSolid& s) {
    OrbitDistributions d;
    d.point_od = point_od(g, s.solid);
    d.hyperplane_od = hyperplane_od(g, s);
    d.base_count = d.point_od[0];
    return d;
}

std::vector<Point2> base_points(const Field& field, const PencilSolid& s) {
    std::vector<Point2> out;
    for_each_point(field, s.solid, [&](const Vec6& v) {
        if (point_type(field, v) == PointType::Rank1) out.push_back(nu_inverse(field, Point5::from_normalized(v)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point2> common_zeros(const Field& field, const PencilSolid& s) {
    std::vector<Point2> out;
    for_each_point(field, Subspace<3>::whole(field), [&](const Vec3& x) {
        if (evaluate_form(field, s.pencil.row(0), x) == 0 && evaluate_form(field, s.pencil.row(1), x) == 0)
            out.push_back(Point2::from_normalized(x));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfies_base_identities(unsigned q, const OrbitDistributions& d) noexcept {
    const auto& a = d.hyperplane_od;
    const long b = d.base_count;
    return static_cast<long>(a[0] + 2 * a[1] + a[3]) == static_cast<long>(q) + b &&
           static_cast<long>(a[1]) - static_cast<long>(a[2]) + 1 == b;
}

PointOD o6_signature(unsigned q) noexcept { return {1, 1, q - 1, 0}; }

PointOD o6_candidate_signature(unsigned q) noexcept { return {2, 1, q * q + q - 2, q * q * q}; }

unsigned count_o6_lines(const Geometry& g, const Solid& s, O6Mode mode) {
    const Field& field = g.field();
    const unsigned q = g.q();
    const PointOD target = o6_signature(q);

    if (mode == O6Mode::Auto) mode = point_od(g, s) == o6_candidate_signature(q) ? O6Mode::Candidates : O6Mode::Full;

    if (mode == O6Mode::Candidates) {
        if (point_od(g, s) != o6_candidate_signature(q))
            throw std::invalid_argument("count_o6_lines: candidates mode needs point-OD [2,1,q^2+q-2,q^3]");
        Vec6 nucleus{};
        std::vector<Vec6> rank_one;
        for_each_point(field, s, [&](const Vec6& v) {
            const PointType t = g.point_type(v);
            if (t == PointType::Rank2Nucleus) nucleus = v;
            if (t == PointType::Rank1) rank_one.push_back(v);
        });
        unsigned count = 0;
        for (const auto& p : rank_one)
            if (point_od_of(g, Subspace<6>::span(field, {nucleus, p})) == target) ++count;
        return count;
    }

    // lines of the solid are the 2-dimensional subspaces of its coordinate space
    const SubspaceIndexer<4> lines(field, 2);
    unsigned count = 0;
    for (std::uint64_t i = 0; i < lines.size(); ++i) {
        const Subspace<4> coeffs = lines.at(i);
        std::array<Vec6, 2> rows{};
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t j = 0; j < 4; ++j)
                if (coeffs.row(r)[j] != 0) rows[r] = rows[r] + scale(field, coeffs.row(r)[j], s.row(j));
        if (point_od_of(g, Subspace<6>::span(field, std::span<const Vec6>(rows))) == target) ++count;
    }
    return count;
}

}  // namespace pencils
