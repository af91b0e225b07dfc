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

#include "pencils/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace pencils {

namespace {

template <class Container>
std::string join(const Container& values) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << ']';
    return out.str();
}

template <class Fn>
CheckResult timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = fn();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Mat3 random_invertible(const Field& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> pick(0, field.q() - 1);
    for (;;) {
        Mat3 a{};
        for (auto& row : a)
            for (auto& e : row) e = static_cast<Elem>(pick(rng));
        if (det(field, a) != 0) return a;
    }
}

}  // namespace

std::array<std::uint64_t, 4> point_census(const Field& field) {
    std::array<std::uint64_t, 4> counts{};
    for_each_point(field, Subspace<6>::whole(field),
                   [&](const Vec6& v) { ++counts[static_cast<std::size_t>(point_type(field, v))]; });
    return counts;
}

std::array<std::uint64_t, 4> hyperplane_census(const Field& field) {
    std::array<std::uint64_t, 4> counts{};
    for_each_point(field, Subspace<6>::whole(field),
                   [&](const Vec6& v) { ++counts[static_cast<std::size_t>(classify_conic(field, v))]; });
    return counts;
}

CheckResult check_census(const Field& field) {
    return timed([&] {
        const std::uint64_t q = field.q();
        const std::uint64_t plane = q * q + q + 1;
        const std::array<std::uint64_t, 4> points{plane, plane, (q * q - 1) * plane, q * q * q * q * q - q * q};
        const std::array<std::uint64_t, 4> hyperplanes{plane, q * (q + 1) * plane / 2, q * (q - 1) * plane / 2,
                                                       q * q * q * q * q - q * q};
        const auto pc = point_census(field);
        const auto hc = hyperplane_census(field);
        CheckResult r{"census q=" + std::to_string(q)};
        r.pass = pc == points && hc == hyperplanes;
        r.detail = "points " + join(pc) + " expected " + join(points) + "; hyperplanes " + join(hc) + " expected " +
                   join(hyperplanes);
        return r;
    });
}

CheckResult check_conic_oracle(const Field& field) {
    return timed([&] {
        CheckResult r{"conic classification oracle q=" + std::to_string(field.q())};
        std::uint64_t total = 0, disagreements = 0;
        for_each_point(field, Subspace<6>::whole(field), [&](const Vec6& v) {
            ++total;
            const Conic c(field, v);
            if (classify_conic(field, c) != classify_conic_by_points(field, c)) {
                if (disagreements++ == 0) r.witness = to_hex(v);
            }
        });
        r.pass = disagreements == 0;
        r.detail = std::to_string(total) + " conics, " + std::to_string(disagreements) + " disagreements";
        return r;
    });
}

CheckResult check_representatives(const Classifier& classifier) {
    return timed([&] {
        const Field& field = classifier.field();
        CheckResult r{"representatives q=" + std::to_string(field.q())};
        unsigned good = 0;
        for (const auto& row : classifier.table()) {
            const PencilSolid s = representative(field, row.label);
            const OrbitDistributions d = distributions(classifier.geometry(), s);
            bool ok = d.point_od == row.point_od && d.hyperplane_od == row.hyperplane_od;
            try {
                ok = ok && classifier.label_of(s, d) == row.label;
            } catch (const ClassificationInconsistency&) {
                ok = false;
            }
            if (ok) {
                ++good;
            } else if (r.witness.empty()) {
                r.witness = label_name(row.label) + " " + serialize_solid(field, s.solid) + " point_od " +
                            join(d.point_od) + " hyperplane_od " + join(d.hyperplane_od);
            }
        }
        r.pass = good == kOrbitCount;
        r.detail = std::to_string(good) + "/15 rows match";
        return r;
    });
}

CheckResult check_od_collisions(unsigned q) {
    return timed([&] {
        CheckResult r{"od collisions q=" + std::to_string(q)};
        const auto found = od_collisions(expected_table(q));
        std::vector<std::pair<OrbitLabel, OrbitLabel>> expected;
        if (q == 2) expected.emplace_back(4, 9);
        expected.emplace_back(11, 12);
        r.pass = found == expected;
        std::ostringstream d;
        for (const auto& [a, b] : found) d << '{' << a << ',' << b << '}';
        r.detail = "collisions " + d.str();
        return r;
    });
}

namespace {

std::vector<CheckResult> sweep_checks(const Classifier& classifier, const SweepTally& t, const std::string& scope) {
    const unsigned q = classifier.field().q();
    std::vector<CheckResult> out;
    CheckResult inc{"no classification inconsistency " + scope, t.inconsistencies == 0,
                    std::to_string(t.inconsistencies) + " of " + std::to_string(t.total), t.inconsistency_witness};
    out.push_back(inc);
    // The base-point identities are only claimed for q > 2.
    if (q > 2)
        out.push_back({"base-point identities " + scope, t.base_identity_failures == 0,
                       std::to_string(t.base_identity_failures) + " violations", t.base_identity_witness});
    std::string by_label;
    for (std::size_t i = 0; i < kOrbitCount; ++i)
        if (t.singular_without_base_by_label[i] != 0)
            by_label += " " + label_name(static_cast<OrbitLabel>(i + 1)) + ":" +
                        std::to_string(t.singular_without_base_by_label[i]);
    out.push_back({"no all-singular pencil without base points " + scope, t.singular_without_base == 0,
                   std::to_string(t.singular_without_base) + " violations" + by_label,
                   t.singular_without_base_witness});
    out.push_back({"no hyperplane-OD [1,0,a,0] with a>0 " + scope, t.double_line_imaginary_only == 0,
                   std::to_string(t.double_line_imaginary_only) + " violations", t.double_line_imaginary_witness});
    return out;
}

}  // namespace

std::vector<CheckResult> check_exhaustive(const Classifier& classifier, unsigned threads, SweepTally* tally,
                                          const ProgressFn& progress) {
    const unsigned q = classifier.field().q();
    const auto start = std::chrono::steady_clock::now();
    const SweepTally t = classify_all(classifier, threads, progress);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (tally != nullptr) *tally = t;

    std::array<std::uint64_t, kOrbitCount> expected{};
    for (const auto& row : classifier.table()) expected[row.label - 1] = row.orbit_size;
    const std::uint64_t solids = gaussian_count(6, 4, q);

    const std::string scope = "q=" + std::to_string(q) + " exhaustive";
    std::vector<CheckResult> out;
    out.push_back({"orbit counts " + scope, t.counts == expected && t.total == solids,
                   "counts " + join(t.counts) + " total " + std::to_string(t.total) + " of " + std::to_string(solids),
                   "", seconds});
    for (auto& c : sweep_checks(classifier, t, scope)) out.push_back(std::move(c));
    return out;
}

std::vector<CheckResult> check_sampled(const Classifier& classifier, std::uint64_t count, std::uint64_t seed,
                                       unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    const SweepTally t = classify_sample(classifier, count, seed, threads);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto out = sweep_checks(classifier, t,
                            "q=" + std::to_string(classifier.field().q()) + " sample of " + std::to_string(count));
    if (!out.empty()) out.front().seconds = seconds;
    return out;
}

CheckResult check_double_and_pair_solids(const Field& field) {
    return timed([&] {
        const Geometry g(field);
        const std::uint64_t q = field.q();
        CheckResult r{"double-line and line-pair solids per nonsingular hyperplane q=" + std::to_string(q)};
        std::uint64_t hyperplanes = 0, bad = 0;
        std::set<std::uint64_t> seen_counts;
        const auto all = points(field, Subspace<6>::whole(field));
        for (const auto& h : all) {
            const Vec6& c = h.coords();
            if (classify_conic(field, c) != ConicKind::Nonsingular) continue;
            ++hyperplanes;
            std::size_t lead = 0;
            while (c[lead] == 0) ++lead;
            // one pencil through c per point of the coordinate hyperplane Y_lead = 0
            std::uint64_t flagged = 0;
            for (const auto& other : all) {
                if (other[lead] != 0) continue;
                const PencilSolid s = PencilSolid::from_pencil(field, Subspace<6>::span(field, {c, other.coords()}));
                const HyperplaneOD a = hyperplane_od(g, s);
                if (a[0] > 0 && a[1] + a[2] > 0) ++flagged;
            }
            seen_counts.insert(flagged);
            if (flagged != q * q && bad++ == 0) r.witness = to_hex(c) + " has " + std::to_string(flagged);
        }
        r.pass = bad == 0 && hyperplanes == q * q * q * q * q - q * q;
        r.detail = std::to_string(hyperplanes) + " hyperplanes, counts seen " + join(seen_counts) + ", expected " +
                   std::to_string(q * q);
        return r;
    });
}

std::vector<CheckResult> check_stabilizers(const Field& field, unsigned threads,
                                           std::vector<StabilizerReport>* reports) {
    const unsigned q = field.q();
    std::vector<CheckResult> out;
    std::uint64_t orbit_sum = 0;
    bool divides = true;
    const auto start = std::chrono::steady_clock::now();
    for (OrbitLabel label = 1; label <= kOrbitCount; ++label) {
        CheckResult r = timed([&] {
            StabilizerReport rep = stabilizer_report(field, label, threads);
            CheckResult c{"stabilizer " + label_name(label) + " q=" + std::to_string(q), rep.pass};
            c.detail = "order " + std::to_string(rep.order) + " expected " + std::to_string(rep.expected_order) +
                       (rep.failures.empty() ? "" : ", failed: " + join(rep.failures));
            if (rep.order == 0 || pgl3_order(q) % rep.order != 0)
                divides = false;
            else
                orbit_sum += pgl3_order(q) / rep.order;
            if (reports != nullptr) reports->push_back(std::move(rep));
            return c;
        });
        out.push_back(std::move(r));
    }
    const std::uint64_t solids = gaussian_count(6, 4, q);
    out.push_back({"orbit sizes sum q=" + std::to_string(q), divides && orbit_sum == solids,
                   "sum " + std::to_string(orbit_sum) + " expected " + std::to_string(solids), "",
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    return out;
}

std::vector<CheckResult> check_generators(const Classifier& classifier) {
    std::vector<CheckResult> out;
    for (OrbitLabel label : labels_with_generators()) {
        out.push_back(timed([&] {
            const GeneratorCheck g = verify_generators(classifier, label);
            CheckResult r{"generators " + label_name(label) + " q=" + std::to_string(g.q), g.pass};
            std::vector<std::string> hex;
            for (const auto& m : g.matrices) hex.push_back(to_hex(m));
            r.detail = "matrices " + join(hex) + " fix " + join(g.fixes) + " generate order " +
                       std::to_string(g.generated_order) + " (" + g.parameters + ")";
            return r;
        }));
    }
    return out;
}

CheckResult check_invariance(const Classifier& classifier, std::uint64_t solids, std::uint64_t matrices,
                             std::uint64_t seed) {
    return timed([&] {
        const Field& field = classifier.field();
        CheckResult r{"projectivity invariance q=" + std::to_string(field.q())};
        std::mt19937_64 rng(seed);
        const SubspaceIndexer<6> indexer(field, 4);
        std::uniform_int_distribution<std::uint64_t> pick(0, indexer.size() - 1);
        const bool all_solids = solids >= indexer.size();
        const std::uint64_t n = all_solids ? indexer.size() : solids;
        std::vector<Mat3> mats;
        for (std::uint64_t i = 0; i < matrices; ++i) mats.push_back(random_invertible(field, rng));
        std::uint64_t bad = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const Solid s = indexer.at(all_solids ? i : pick(rng));
            const Classification base = classifier.classify(PencilSolid::from_solid(field, s));
            for (const auto& a : mats) {
                const Classification moved = classifier.classify(PencilSolid::from_solid(field, Lift(field, a).apply(s)));
                if (moved.label != base.label || !(moved.distributions == base.distributions)) {
                    if (bad++ == 0) r.witness = serialize_solid(field, s) + " under " + to_hex(a);
                }
            }
        }
        r.pass = bad == 0;
        r.detail = std::to_string(n) + " solids x " + std::to_string(mats.size()) + " matrices, " +
                   std::to_string(bad) + " changed";
        return r;
    });
}

std::string_view to_string(VerifyLevel level) noexcept {
    switch (level) {
        case VerifyLevel::Q2Full:
            return "q2-full";
        case VerifyLevel::Q4Full:
            return "q4-full";
        case VerifyLevel::Q8Reps:
            return "q8-reps";
        case VerifyLevel::Q8Full:
            return "q8-full";
    }
    return "?";
}

VerifyLevel parse_verify_level(std::string_view name) {
    for (VerifyLevel l : {VerifyLevel::Q2Full, VerifyLevel::Q4Full, VerifyLevel::Q8Reps, VerifyLevel::Q8Full})
        if (to_string(l) == name) return l;
    throw std::invalid_argument("unknown verification level '" + std::string(name) +
                                "' (expected q2-full, q4-full, q8-reps or q8-full)");
}

bool VerifyReport::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verify(VerifyLevel level, unsigned threads, const ProgressFn& progress) {
    VerifyReport report;
    report.level = level;
    const auto add = [&](std::vector<CheckResult> rs) {
        for (auto& r : rs) report.checks.push_back(std::move(r));
    };

    switch (level) {
        case VerifyLevel::Q2Full:
        case VerifyLevel::Q4Full: {
            const unsigned q = level == VerifyLevel::Q2Full ? 2 : 4;
            report.q = q;
            const Field field(q);
            const Classifier classifier(field);
            report.checks.push_back(check_census(field));
            report.checks.push_back(check_conic_oracle(field));
            report.checks.push_back(check_representatives(classifier));
            report.checks.push_back(check_od_collisions(q));
            SweepTally tally;
            add(check_exhaustive(classifier, threads, &tally, progress));
            report.tally = tally;
            report.checks.push_back(check_double_and_pair_solids(field));
            add(check_stabilizers(field, threads, &report.stabilizers));
            add(check_generators(classifier));
            report.checks.push_back(q == 2 ? check_invariance(classifier, ~0ull, 24, 2)
                                           : check_invariance(classifier, 2000, 4, 4));
            break;
        }
        case VerifyLevel::Q8Reps: {
            report.q = 8;
            const Field field(8);
            const Classifier classifier(field);
            report.checks.push_back(check_representatives(classifier));
            report.checks.push_back(check_od_collisions(8));
            add(check_stabilizers(field, threads, &report.stabilizers));
            add(check_generators(classifier));
            add(check_sampled(classifier, 100000, 8, threads));
            report.checks.push_back(check_invariance(classifier, 500, 4, 8));
            break;
        }
        case VerifyLevel::Q8Full: {
            report.q = 8;
            const Field field(8);
            const Classifier classifier(field);
            SweepTally tally;
            add(check_exhaustive(classifier, threads, &tally, progress));
            report.tally = tally;
            break;
        }
    }
    return report;
}

}  // namespace pencils
