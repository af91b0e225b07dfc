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

#ifndef PENCILS_PENCIL_HPP
#define PENCILS_PENCIL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pencils/field.hpp"
#include "pencils/projgeom.hpp"
#include "pencils/veronese.hpp"

namespace pencils {

/// [r1, r2n, r2s, r3]: points of a subspace per point type.
using PointOD = std::array<std::uint32_t, 4>;
/// [a1, a2r, a2i, a3]: hyperplanes through a solid per conic kind.
using HyperplaneOD = std::array<std::uint32_t, 4>;

/**
 * @brief A solid of PG(5,q) together with its pencil of conics.
 *
 * Both are canonical echelon bases and each is the annihilator of the other:
 * the conics of the pencil are exactly the hyperplanes containing the solid.
 */
struct PencilSolid {
    Solid solid;
    Subspace<6> pencil;
    unsigned q = 0;

    /// Throws std::invalid_argument unless s has rank 4.
    static PencilSolid from_solid(const Field& field, const Solid& s);
    /// Throws std::invalid_argument unless p has rank 2.
    static PencilSolid from_pencil(const Field& field, const Subspace<6>& p);

    friend bool operator==(const PencilSolid& a, const PencilSolid& b) noexcept {
        return a.q == b.q && a.solid == b.solid;
    }
};

/// The pencil spanned by two conics. Throws std::invalid_argument when the
/// conics are equal (proportional coefficient vectors).
PencilSolid from_conics(const Field& field, const Conic& c1, const Conic& c2);

struct OrbitDistributions {
    PointOD point_od{};
    HyperplaneOD hyperplane_od{};
    std::uint32_t base_count = 0;

    friend bool operator==(const OrbitDistributions&, const OrbitDistributions&) = default;
};

/// The q+1 conics of the pencil, as the normalized points of the pencil space.
std::vector<Conic> pencil_members(const Field& field, const PencilSolid& s);

/// Point types counted over the q^3+q^2+q+1 points, using packed tables.
PointOD point_od(const Geometry& geometry, const Solid& s);
/// Same count straight from rank computations on each point; test oracle.
PointOD point_od_reference(const Field& field, const Solid& s);
/// Point-OD of any subspace (lines, planes, ...).
PointOD point_od_of(const Geometry& geometry, const Subspace<6>& s);

/// Conic kinds counted over the q+1 pencil members.
HyperplaneOD hyperplane_od(const Geometry& geometry, const PencilSolid& s);
/// Same count through classify_conic_by_points; test oracle.
HyperplaneOD hyperplane_od_reference(const Field& field, const PencilSolid& s);

OrbitDistributions distributions(const Geometry& geometry, const PencilSolid& s);

/// Preimages under nu of the rank-1 points of the solid, sorted.
std::vector<Point2> base_points(const Field& field, const PencilSolid& s);
/// Common zeros of the pencil members, sorted.
std::vector<Point2> common_zeros(const Field& field, const PencilSolid& s);

/// a1 + 2 a2r + a3 = q + b and a2r - a2i + 1 = b.
bool satisfies_base_identities(unsigned q, const OrbitDistributions& d) noexcept;

enum class O6Mode : std::uint8_t { Auto, Candidates, Full };

/// Point-OD [1, 1, q-1, 0] of an o6 line.
PointOD o6_signature(unsigned q) noexcept;
/// Point-OD [2, 1, q^2+q-2, q^3] shared by the two orbits the o6 count separates.
PointOD o6_candidate_signature(unsigned q) noexcept;

/**
 * @brief Number of lines of the solid with point-OD [1, 1, q-1, 0].
 *
 * Candidates mode only tests the two lines joining the unique nucleus-plane
 * point to the two rank-1 points, and requires the solid's point-OD to be
 * o6_candidate_signature(q) (std::invalid_argument otherwise). Full mode
 * scans all (q^2+1)(q^2+q+1) lines. Auto picks candidates when allowed.
 */
unsigned count_o6_lines(const Geometry& geometry, const Solid& s, O6Mode mode = O6Mode::Auto);

}  // namespace pencils

#endif  // PENCILS_PENCIL_HPP
