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

#ifndef PENCILS_CLASSIFIER_HPP
#define PENCILS_CLASSIFIER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencils/field.hpp"
#include "pencils/pencil.hpp"
#include "pencils/veronese.hpp"

namespace pencils {

inline constexpr unsigned kOrbitCount = 15;

/// Orbit label: 1..15.
using OrbitLabel = unsigned;

/// "Omega_<i>".
std::string label_name(OrbitLabel label);
/// Throws std::invalid_argument unless 1 <= label <= 15.
void check_label(OrbitLabel label);

/// One row of the invariant table, with every closed form evaluated at q.
struct OrbitRow {
    OrbitLabel label = 0;
    PointOD point_od{};
    HyperplaneOD hyperplane_od{};
    std::uint64_t stabilizer_order = 0;
    std::uint64_t orbit_size = 0;
    /// True when another row has the same (point_od, hyperplane_od) at this q.
    bool tie_break = false;
    /// Name of the stabilizer's isomorphism type, e.g. "Sym_4".
    std::string structure;
};

/// q^3 (q^3-1) (q^2-1).
std::uint64_t pgl3_order(unsigned q);

/// The 15 rows at q (q even, 2 <= q <= 16). Throws std::invalid_argument otherwise.
std::vector<OrbitRow> expected_table(unsigned q);

/// Raised when a solid's invariants match no row, or a tie-break count is
/// not one of the expected values.
class ClassificationInconsistency : public std::runtime_error {
   public:
    ClassificationInconsistency(const std::string& what, std::string solid)
        : std::runtime_error(what + " [" + solid + "]"), solid_(std::move(solid)) {}
    const std::string& solid() const noexcept { return solid_; }

   private:
    std::string solid_;
};

struct Classification {
    OrbitLabel label = 0;
    OrbitDistributions distributions;
};

/**
 * @brief Labels solids by their (point-OD, hyperplane-OD) pair.
 *
 * Ties are broken by counting lines with point-OD [1,1,q-1,0]: on the pair
 * (11, 12) over the two candidate lines (1 -> 11, 0 -> 12), and at q=2 on the
 * pair (4, 9) over all lines (3 -> 4, 0 -> 9). Immutable; safe to share.
 */
class Classifier {
   public:
    explicit Classifier(const Field& field);

    const Field& field() const noexcept { return geometry_.field(); }
    const Geometry& geometry() const noexcept { return geometry_; }
    const std::vector<OrbitRow>& table() const noexcept { return table_; }

    /// Throws ClassificationInconsistency.
    Classification classify(const PencilSolid& s) const;
    /// Label for already-computed distributions.
    OrbitLabel label_of(const PencilSolid& s, const OrbitDistributions& d) const;

   private:
    Geometry geometry_;
    std::vector<OrbitRow> table_;
    std::map<std::pair<PointOD, HyperplaneOD>, std::vector<OrbitLabel>> by_signature_;
};

/// Pairs of labels whose rows share an OD pair at q.
std::vector<std::pair<OrbitLabel, OrbitLabel>> od_collisions(const std::vector<OrbitRow>& table);

/// Tallies of an exhaustive or sampled classification sweep. All fields merge
/// by addition; the witnesses keep the first offender in enumeration order.
struct SweepTally {
    std::array<std::uint64_t, kOrbitCount> counts{};
    std::uint64_t total = 0;
    std::uint64_t inconsistencies = 0;
    /// Solids violating a1 + 2 a2r + a3 = q + b or a2r - a2i + 1 = b.
    std::uint64_t base_identity_failures = 0;
    /// Solids with q+1 singular conics and no base point.
    std::uint64_t singular_without_base = 0;
    /// The same solids, by label (index label - 1).
    std::array<std::uint64_t, kOrbitCount> singular_without_base_by_label{};
    /// Solids with hyperplane-OD [1, 0, a2i, 0], a2i > 0.
    std::uint64_t double_line_imaginary_only = 0;
    std::string inconsistency_witness;
    std::string base_identity_witness;
    std::string singular_without_base_witness;
    std::string double_line_imaginary_witness;

    void merge(const SweepTally& other);
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Classifies every solid of PG(5,q). Work is split into chunks of
/// consecutive echelon indices inside each pivot pattern; chunk tallies are
/// merged in index order.
SweepTally classify_all(const Classifier& classifier, unsigned threads, const ProgressFn& progress = {});

/// Classifies `count` solids drawn uniformly (with replacement) from all
/// solids of PG(5,q). Deterministic for a given seed, whatever the thread count.
SweepTally classify_sample(const Classifier& classifier, std::uint64_t count, std::uint64_t seed, unsigned threads);

}  // namespace pencils

#endif  // PENCILS_CLASSIFIER_HPP
