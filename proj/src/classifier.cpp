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

#include "pencils/classifier.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "pencils/parallel.hpp"

namespace pencils {

std::string label_name(OrbitLabel label) { return "Omega_" + std::to_string(label); }

void check_label(OrbitLabel label) {
    if (label < 1 || label > kOrbitCount)
        throw std::invalid_argument("orbit label must be in 1..15, got " + std::to_string(label));
}

std::uint64_t pgl3_order(unsigned q) {
    const std::uint64_t Q = q;
    return Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1);
}

std::vector<OrbitRow> expected_table(unsigned q) {
    if (q < 2 || q > 16 || (q & (q - 1)) != 0)
        throw std::invalid_argument("expected_table: q must be 2, 4, 8 or 16");
    const std::uint64_t Q = q, Q2 = Q * Q, Q3 = Q2 * Q;
    const std::uint64_t G = pgl3_order(q);
    const auto u = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };

    std::vector<OrbitRow> t(kOrbitCount);
    const auto set = [&](OrbitLabel i, PointOD p, HyperplaneOD h, std::uint64_t stab, std::uint64_t orbit,
                         std::string structure) {
        t[i - 1] = {i, p, h, stab, orbit, false, std::move(structure)};
    };
    set(1, {1, u(Q + 1), u(2 * Q2 - 1), u(Q3 - Q2)}, {1, u(Q / 2), u(Q / 2), 0}, Q3 * (Q - 1), (Q3 - 1) * (Q + 1),
        "E_q^2:(E_q x C_{q-1})");
    set(2, {u(Q + 1), u(Q + 1), u(2 * Q2 - Q - 1), u(Q3 - Q2)}, {1, u(Q), 0, 0}, Q3 * (Q - 1) * (Q - 1),
        (Q2 + Q + 1) * (Q + 1), "E_q^{1+2}:C_{q-1}^2");
    set(3, {1, u(Q2 + Q + 1), u(Q2 - 1), u(Q3 - Q2)}, {u(Q + 1), 0, 0, 0}, Q3 * (Q - 1) * (Q2 - 1), Q2 + Q + 1,
        "E_q^2:GL(2,q)");
    set(4, {u(Q + 2), 1, u(2 * Q2 - 2), u(Q3 - Q2)}, {0, u(Q + 1), 0, 0}, Q * (Q - 1) * (Q2 - 1),
        Q2 * (Q2 + Q + 1), "GL(2,q)");
    set(5, {1, u(Q + 1), u(Q2 - 1), u(Q3)}, {1, 0, 0, u(Q)}, Q2 * (Q - 1), Q * (Q3 - 1) * (Q + 1),
        "E_q^2:C_{q-1}");
    set(6, {2, u(Q + 1), u(Q2 + Q - 2), u(Q3 - Q)}, {1, 1, 0, u(Q - 1)}, 2 * (Q - 1) * (Q - 1),
        Q3 * (Q2 + Q + 1) * (Q + 1) / 2, "C_{q-1}^2:C_2");
    set(7, {0, u(Q + 1), u(Q2 + Q), u(Q3 - Q)}, {1, 0, 1, u(Q - 1)}, 2 * (Q + 1) * (Q - 1), Q3 * (Q3 - 1) / 2,
        "D_{2(q+1)} x C_{q-1}");
    set(8, {3, 1, u(Q2 + 2 * Q - 3), u(Q3 - Q)}, {0, 2, 0, u(Q - 1)}, 2 * (Q - 1), Q3 * (Q3 - 1) * (Q + 1) / 2,
        "C_{q-1} x C_2");
    set(9, {4, 1, u(Q2 + 3 * Q - 4), u(Q3 - 2 * Q)}, {0, 3, 0, u(Q - 2)}, 24, Q3 * (Q3 - 1) * (Q2 - 1) / 24,
        "Sym_4");
    set(10, {1, 1, u(Q2 + 2 * Q - 1), u(Q3 - Q)}, {0, 1, 1, u(Q - 1)}, 2 * (Q - 1), Q3 * (Q3 - 1) * (Q + 1) / 2,
        "C_{q-1} x C_2");
    set(11, {2, 1, u(Q2 + Q - 2), u(Q3)}, {0, 1, 0, u(Q)}, Q * (Q - 1), Q2 * (Q3 - 1) * (Q + 1), "E_q:C_{q-1}");
    set(12, {2, 1, u(Q2 + Q - 2), u(Q3)}, {0, 1, 0, u(Q)}, 4, Q3 * (Q3 - 1) * (Q2 - 1) / 4, "C_2^2");
    set(13, {0, 1, u(Q2 + 3 * Q), u(Q3 - 2 * Q)}, {0, 1, 2, u(Q - 2)}, 8, Q3 * (Q3 - 1) * (Q2 - 1) / 8,
        "C_2^2:C_2");
    set(14, {0, 1, u(Q2 + Q), u(Q3)}, {0, 0, 1, u(Q)}, 4, Q3 * (Q3 - 1) * (Q2 - 1) / 4, "C_4");
    set(15, {1, 1, u(Q2 - 1), u(Q3 + Q)}, {0, 0, 0, u(Q + 1)}, 3, Q3 * (Q3 - 1) * (Q2 - 1) / 3, "C_3");

    for (auto& row : t) {
        if (row.stabilizer_order * row.orbit_size != G)
            throw std::logic_error("expected_table: orbit-stabilizer mismatch for " + label_name(row.label));
        for (const auto& other : t)
            if (other.label != row.label && other.point_od == row.point_od && other.hyperplane_od == row.hyperplane_od)
                row.tie_break = true;
    }
    return t;
}

std::vector<std::pair<OrbitLabel, OrbitLabel>> od_collisions(const std::vector<OrbitRow>& table) {
    std::vector<std::pair<OrbitLabel, OrbitLabel>> out;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j)
            if (table[i].point_od == table[j].point_od && table[i].hyperplane_od == table[j].hyperplane_od)
                out.emplace_back(table[i].label, table[j].label);
    return out;
}

Classifier::Classifier(const Field& field) : geometry_(field), table_(expected_table(field.q())) {
    for (const auto& row : table_) by_signature_[{row.point_od, row.hyperplane_od}].push_back(row.label);
}

OrbitLabel Classifier::label_of(const PencilSolid& s, const OrbitDistributions& d) const {
    const auto it = by_signature_.find({d.point_od, d.hyperplane_od});
    if (it == by_signature_.end())
        throw ClassificationInconsistency("no orbit has these distributions", serialize_solid(field(), s.solid));
    const auto& labels = it->second;
    if (labels.size() == 1) return labels.front();

    const auto tie = [&](OrbitLabel a, OrbitLabel b) { return labels == std::vector<OrbitLabel>{a, b}; };
    if (tie(11, 12)) {
        const unsigned n = count_o6_lines(geometry_, s.solid, O6Mode::Candidates);
        if (n == 1) return 11;
        if (n == 0) return 12;
        throw ClassificationInconsistency("unexpected o6 line count " + std::to_string(n) + " on the 11/12 tie",
                                          serialize_solid(field(), s.solid));
    }
    if (tie(4, 9)) {
        const unsigned n = count_o6_lines(geometry_, s.solid, O6Mode::Full);
        if (n == 3) return 4;
        if (n == 0) return 9;
        throw ClassificationInconsistency("unexpected o6 line count " + std::to_string(n) + " on the 4/9 tie",
                                          serialize_solid(field(), s.solid));
    }
    throw ClassificationInconsistency("distributions shared by orbits without a tie-break rule",
                                      serialize_solid(field(), s.solid));
}

Classification Classifier::classify(const PencilSolid& s) const {
    Classification c;
    c.distributions = distributions(geometry_, s);
    c.label = label_of(s, c.distributions);
    return c;
}

void SweepTally::merge(const SweepTally& other) {
    for (std::size_t i = 0; i < kOrbitCount; ++i) {
        counts[i] += other.counts[i];
        singular_without_base_by_label[i] += other.singular_without_base_by_label[i];
    }
    total += other.total;
    const auto take = [](std::uint64_t& n, std::string& w, std::uint64_t on, const std::string& ow) {
        if (w.empty() && !ow.empty()) w = ow;
        n += on;
    };
    take(inconsistencies, inconsistency_witness, other.inconsistencies, other.inconsistency_witness);
    take(base_identity_failures, base_identity_witness, other.base_identity_failures, other.base_identity_witness);
    take(singular_without_base, singular_without_base_witness, other.singular_without_base,
         other.singular_without_base_witness);
    take(double_line_imaginary_only, double_line_imaginary_witness, other.double_line_imaginary_only,
         other.double_line_imaginary_witness);
}

namespace {

void record_solid(const Classifier& classifier, const Solid& solid, SweepTally& tally) {
    const Field& field = classifier.field();
    const unsigned q = field.q();
    const PencilSolid s = PencilSolid::from_solid(field, solid);
    const OrbitDistributions d = distributions(classifier.geometry(), s);
    ++tally.total;

    const auto flag = [&](std::uint64_t& n, std::string& witness) {
        if (n++ == 0) witness = serialize_solid(field, solid);
    };
    OrbitLabel label = 0;
    try {
        label = classifier.label_of(s, d);
        ++tally.counts[label - 1];
    } catch (const ClassificationInconsistency&) {
        flag(tally.inconsistencies, tally.inconsistency_witness);
    }
    if (!satisfies_base_identities(q, d)) flag(tally.base_identity_failures, tally.base_identity_witness);
    const auto& a = d.hyperplane_od;
    if (a[0] + a[1] + a[2] == q + 1 && d.base_count == 0) {
        flag(tally.singular_without_base, tally.singular_without_base_witness);
        if (label != 0) ++tally.singular_without_base_by_label[label - 1];
    }
    if (a[0] == 1 && a[1] == 0 && a[2] > 0 && a[3] == 0)
        flag(tally.double_line_imaginary_only, tally.double_line_imaginary_witness);
}

constexpr std::uint64_t kChunk = 1u << 14;

}  // namespace

SweepTally classify_all(const Classifier& classifier, unsigned threads, const ProgressFn& progress) {
    const SubspaceIndexer<6> indexer(classifier.field(), 4);

    // chunks never straddle a pivot pattern
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    for (std::size_t p = 0; p < indexer.pattern_count(); ++p) {
        const std::uint64_t begin = indexer.pattern_offset(p);
        const std::uint64_t end = p + 1 < indexer.pattern_count() ? indexer.pattern_offset(p + 1) : indexer.size();
        for (std::uint64_t b = begin; b < end; b += kChunk) chunks.emplace_back(b, std::min(end, b + kChunk));
    }

    std::vector<SweepTally> partial(chunks.size());
    std::mutex progress_mutex;
    std::uint64_t done = 0;
    parallel_for_shards(chunks.size(), threads, [&](std::size_t c) {
        for (std::uint64_t i = chunks[c].first; i < chunks[c].second; ++i)
            record_solid(classifier, indexer.at(i), partial[c]);
        if (progress) {
            const std::lock_guard lock(progress_mutex);
            done += chunks[c].second - chunks[c].first;
            progress(done, indexer.size());
        }
    });

    SweepTally tally;
    for (const auto& p : partial) tally.merge(p);
    return tally;
}

SweepTally classify_sample(const Classifier& classifier, std::uint64_t count, std::uint64_t seed, unsigned threads) {
    const SubspaceIndexer<6> indexer(classifier.field(), 4);
    const std::uint64_t shards = (count + kChunk - 1) / kChunk;
    std::vector<SweepTally> partial(shards);
    parallel_for_shards(shards, threads, [&](std::size_t c) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<std::uint64_t> pick(0, indexer.size() - 1);
        const std::uint64_t n = std::min<std::uint64_t>(kChunk, count - c * kChunk);
        for (std::uint64_t i = 0; i < n; ++i) record_solid(classifier, indexer.at(pick(rng)), partial[c]);
    });
    SweepTally tally;
    for (const auto& p : partial) tally.merge(p);
    return tally;
}

}  // namespace pencils
