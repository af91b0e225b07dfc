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

#ifndef PENCILS_VERIFY_HPP
#define PENCILS_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pencils/classifier.hpp"
#include "pencils/group.hpp"

namespace pencils {

struct CheckResult {
    CheckResult() = default;
    CheckResult(std::string name_, bool pass_ = false, std::string detail_ = {}, std::string witness_ = {},
                         double seconds_ = 0)
        : name(std::move(name_)),
          pass(pass_),
          detail(std::move(detail_)),
          witness(std::move(witness_)),
          seconds(seconds_) {}

    std::string name;
    bool pass = false;
    std::string detail;
    /// A serialized offender when the check failed on a specific object.
    std::string witness;
    double seconds = 0;
};

/// Point types of all points of PG(5,q), in PointType order.
std::array<std::uint64_t, 4> point_census(const Field& field);
/// Conic kinds of all hyperplanes of PG(5,q), in ConicKind order.
std::array<std::uint64_t, 4> hyperplane_census(const Field& field);

CheckResult check_census(const Field& field);
/// classify_conic against classify_conic_by_points on every conic.
CheckResult check_conic_oracle(const Field& field);
/// Distributions and label of each representative against its table row.
CheckResult check_representatives(const Classifier& classifier);
/// OD-pair collisions of the table at q are exactly the expected tie pairs.
CheckResult check_od_collisions(unsigned q);
/// Exhaustive classification; per-label counts against the table and the
/// sweep-wide identities. Returns one result per property.
std::vector<CheckResult> check_exhaustive(const Classifier& classifier, unsigned threads, SweepTally* tally = nullptr,
                                          const ProgressFn& progress = {});
/// Sampled classification with the same properties (counts not compared).
std::vector<CheckResult> check_sampled(const Classifier& classifier, std::uint64_t count, std::uint64_t seed,
                                       unsigned threads);
/// Inside every hyperplane with a nonsingular conic, count the solids that
/// also lie in a double-line hyperplane and a line-pair hyperplane; each
/// count must be q^2.
CheckResult check_double_and_pair_solids(const Field& field);
/// Stabilizer reports of all representatives plus the orbit-size sum.
std::vector<CheckResult> check_stabilizers(const Field& field, unsigned threads,
                                           std::vector<StabilizerReport>* reports = nullptr);
std::vector<CheckResult> check_generators(const Classifier& classifier);
/// Distributions and labels are unchanged by random lifted projectivities.
CheckResult check_invariance(const Classifier& classifier, std::uint64_t solids, std::uint64_t matrices,
                             std::uint64_t seed);

enum class VerifyLevel { Q2Full, Q4Full, Q8Reps, Q8Full };

std::string_view to_string(VerifyLevel level) noexcept;
/// Throws std::invalid_argument on an unknown name.
VerifyLevel parse_verify_level(std::string_view name);

struct VerifyReport {
    VerifyLevel level = VerifyLevel::Q2Full;
    unsigned q = 0;
    std::vector<CheckResult> checks;
    /// Present when the level includes an exhaustive sweep.
    std::optional<SweepTally> tally;
    /// One per representative when the level computes stabilizers.
    std::vector<StabilizerReport> stabilizers;

    bool pass() const noexcept;
};

VerifyReport run_verify(VerifyLevel level, unsigned threads, const ProgressFn& progress = {});

}  // namespace pencils

#endif  // PENCILS_VERIFY_HPP
