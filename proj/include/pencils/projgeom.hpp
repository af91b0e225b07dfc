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

#ifndef PENCILS_PROJGEOM_HPP
#define PENCILS_PROJGEOM_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pencils/field.hpp"

namespace pencils {

template <std::size_t N>
using Vec = std::array<Elem, N>;
using Vec3 = Vec<3>;
using Vec6 = Vec<6>;

template <std::size_t N>
constexpr bool is_zero(const Vec<N>& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b) noexcept {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<Elem>(a[i] ^ b[i]);
    return out;
}

template <std::size_t N>
Vec<N> scale(const Field& field, Elem c, const Vec<N>& v) noexcept {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = field.mul(c, v[i]);
    return out;
}

template <std::size_t N>
Elem dot(const Field& field, const Vec<N>& a, const Vec<N>& b) noexcept {
    Elem acc = 0;
    for (std::size_t i = 0; i < N; ++i) acc ^= field.mul(a[i], b[i]);
    return acc;
}

/// Scales v so that its first nonzero coordinate is 1. Throws on the zero vector.
template <std::size_t N>
Vec<N> normalize(const Field& field, const Vec<N>& v) {
    for (std::size_t i = 0; i < N; ++i)
        if (v[i] != 0) return scale(field, field.inv(v[i]), v);
    throw std::invalid_argument("the zero vector is not a projective point");
}

template <std::size_t N>
bool is_normalized(const Vec<N>& v) noexcept {
    for (std::size_t i = 0; i < N; ++i)
        if (v[i] != 0) return v[i] == 1;
    return false;
}

/// A point of PG(N-1, q) in normalized homogeneous coordinates.
template <std::size_t N>
class ProjectivePoint {
   public:
    ProjectivePoint(const Field& field, const Vec<N>& coords) : coords_(normalize(field, coords)) {}

    /// Wraps coordinates that are already normalized.
    static ProjectivePoint from_normalized(const Vec<N>& coords) {
        if (!is_normalized(coords)) throw std::invalid_argument("coordinates are not normalized");
        return ProjectivePoint(coords, 0);
    }

    const Vec<N>& coords() const noexcept { return coords_; }
    Elem operator[](std::size_t i) const noexcept { return coords_[i]; }

    friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

   private:
    ProjectivePoint(const Vec<N>& coords, int) : coords_(coords) {}
    Vec<N> coords_;
};

using Point2 = ProjectivePoint<3>;
using Point5 = ProjectivePoint<6>;

/// Reduced row-echelon form in place over the first `count` rows; returns the
/// rank. Nonzero rows end up first, zero rows after.
template <std::size_t N, std::size_t M>
std::size_t rref(const Field& field, std::array<Vec<N>, M>& rows, std::size_t count) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < count; ++col) {
        std::size_t pivot = rank;
        while (pivot < count && rows[pivot][col] == 0) ++pivot;
        if (pivot == count) continue;
        std::swap(rows[rank], rows[pivot]);
        rows[rank] = scale(field, field.inv(rows[rank][col]), rows[rank]);
        for (std::size_t r = 0; r < count; ++r) {
            if (r != rank && rows[r][col] != 0) rows[r] = rows[r] + scale(field, rows[r][col], rows[rank]);
        }
        ++rank;
    }
    return rank;
}

/**
 * @brief A subspace of PG(N-1, q) held as its reduced row-echelon basis.
 *
 * The echelon basis is the unique canonical representative of the row space,
 * so equality of subspaces is equality of bases. A subspace with k basis rows
 * has projective dimension k-1 and (q^k-1)/(q-1) points. The zero subspace
 * (k = 0) only arises as the annihilator of the whole space.
 */
template <std::size_t N>
class Subspace {
   public:
    Subspace() = default;

    /// Span of the generators. Throws std::invalid_argument if the span is zero.
    static Subspace span(const Field& field, std::span<const Vec<N>> generators) {
        Subspace s;
        std::array<Vec<N>, N> basis{};
        std::vector<Vec<N>> work(generators.begin(), generators.end());
        std::size_t rank = 0;
        // incremental reduction keeps the working set at most N rows
        for (const auto& g : work) {
            if (rank == N) break;
            basis[rank] = g;
            rank = rref(field, basis, rank + 1);
        }
        if (rank == 0) throw std::invalid_argument("generators span the zero subspace");
        s.rows_ = basis;
        s.rank_ = static_cast<std::uint8_t>(rank);
        return s;
    }

    static Subspace span(const Field& field, std::initializer_list<Vec<N>> generators) {
        return span(field, std::span<const Vec<N>>(generators.begin(), generators.size()));
    }

    /// Wraps rows that are already in reduced row-echelon form (not checked in
    /// release builds; used by the enumerators).
    static Subspace from_echelon(std::span<const Vec<N>> rows) {
        Subspace s;
        std::copy(rows.begin(), rows.end(), s.rows_.begin());
        s.rank_ = static_cast<std::uint8_t>(rows.size());
        return s;
    }

    static Subspace whole(const Field& field) {
        std::array<Vec<N>, N> id{};
        for (std::size_t i = 0; i < N; ++i) id[i][i] = 1;
        return span(field, std::span<const Vec<N>>(id));
    }

    std::size_t rank() const noexcept { return rank_; }
    int projective_dimension() const noexcept { return static_cast<int>(rank_) - 1; }
    std::span<const Vec<N>> rows() const noexcept { return {rows_.data(), rank_}; }
    const Vec<N>& row(std::size_t i) const noexcept { return rows_[i]; }

    /// Pivot column of each basis row.
    std::array<std::size_t, N> pivots() const noexcept {
        std::array<std::size_t, N> out{};
        for (std::size_t r = 0; r < rank_; ++r) {
            std::size_t c = 0;
            while (rows_[r][c] == 0) ++c;
            out[r] = c;
        }
        return out;
    }

    bool contains(const Field& field, const Vec<N>& v) const {
        Vec<N> rem = v;
        const auto piv = pivots();
        for (std::size_t r = 0; r < rank_; ++r)
            if (rem[piv[r]] != 0) rem = rem + scale(field, rem[piv[r]], rows_[r]);
        return is_zero(rem);
    }

    bool contains(const Field& field, const Subspace& other) const {
        return std::all_of(other.rows().begin(), other.rows().end(),
                           [&](const Vec<N>& v) { return contains(field, v); });
    }

    std::uint64_t point_count(unsigned q) const noexcept {
        std::uint64_t n = 0;
        for (std::size_t i = 0; i < rank_; ++i) n = n * q + 1;
        return n;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        if (a.rank_ != b.rank_) return false;
        return std::equal(a.rows_.begin(), a.rows_.begin() + a.rank_, b.rows_.begin());
    }
    friend bool operator<(const Subspace& a, const Subspace& b) noexcept {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        return std::lexicographical_compare(a.rows_.begin(), a.rows_.begin() + a.rank_, b.rows_.begin(),
                                            b.rows_.begin() + b.rank_);
    }

   private:
    std::array<Vec<N>, N> rows_{};
    std::uint8_t rank_ = 0;
};

using Solid = Subspace<6>;

/// All linear forms vanishing on s, as a subspace of the dual space (same
/// coordinates). annihilator(annihilator(s)) == s.
template <std::size_t N>
Subspace<N> annihilator(const Field& field, const Subspace<N>& s) {
    const auto piv = s.pivots();
    std::array<bool, N> is_pivot{};
    for (std::size_t r = 0; r < s.rank(); ++r) is_pivot[piv[r]] = true;

    std::vector<Vec<N>> forms;
    for (std::size_t j = 0; j < N; ++j) {
        if (is_pivot[j]) continue;
        Vec<N> f{};
        f[j] = 1;
        // char 2: -x = x
        for (std::size_t r = 0; r < s.rank(); ++r) f[piv[r]] = s.row(r)[j];
        forms.push_back(f);
    }
    if (forms.empty()) return Subspace<N>{};
    return Subspace<N>::span(field, std::span<const Vec<N>>(forms));
}

/// Calls fn(const Vec<N>&) once for each point of s, in normalized form.
/// Enumeration: leading basis index ascending, then the remaining
/// coefficients in mixed-radix ascending order.
template <std::size_t N, class Fn>
void for_each_point(const Field& field, const Subspace<N>& s, Fn&& fn) {
    const std::size_t k = s.rank();
    const unsigned q = field.q();
    std::array<Elem, N> coeff{};
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        const std::size_t tail = k - lead - 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < tail; ++i) combos *= q;
        for (std::uint64_t m = 0; m < combos; ++m) {
            std::uint64_t rest = m;
            for (std::size_t i = k; i-- > lead + 1;) {
                coeff[i] = static_cast<Elem>(rest % q);
                rest /= q;
            }
            Vec<N> v{};
            for (std::size_t i = lead; i < k; ++i)
                if (coeff[i] != 0) v = v + scale(field, coeff[i], s.row(i));
            fn(static_cast<const Vec<N>&>(v));
        }
    }
}

template <std::size_t N>
std::vector<ProjectivePoint<N>> points(const Field& field, const Subspace<N>& s) {
    std::vector<ProjectivePoint<N>> out;
    out.reserve(s.point_count(field.q()));
    for_each_point(field, s, [&](const Vec<N>& v) { out.push_back(ProjectivePoint<N>::from_normalized(v)); });
    return out;
}

template <std::size_t N>
std::vector<ProjectivePoint<N>> all_points(const Field& field) {
    return points(field, Subspace<N>::whole(field));
}

/// Number of k-dimensional subspaces of GF(q)^n (Gaussian binomial).
std::uint64_t gaussian_count(unsigned n, unsigned k, unsigned q);

/**
 * @brief Index space over all k-dimensional subspaces of GF(q)^N.
 *
 * Order: pivot patterns in lexicographic order, then free echelon entries as
 * mixed-radix digits (first row's free entries most significant). at(i) is a
 * pure function of i, so index ranges shard cleanly across workers.
 */
template <std::size_t N>
class SubspaceIndexer {
   public:
    SubspaceIndexer(const Field& field, std::size_t k) : q_(field.q()), k_(k) {
        if (k == 0 || k > N) throw std::invalid_argument("subspace dimension out of range");
        std::vector<std::size_t> pattern(k);
        for (std::size_t i = 0; i < k; ++i) pattern[i] = i;
        std::uint64_t offset = 0;
        while (true) {
            Pattern p;
            std::copy(pattern.begin(), pattern.end(), p.pivots.begin());
            std::array<bool, N> pivot_col{};
            for (auto c : pattern) pivot_col[c] = true;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = pattern[r] + 1; c < N; ++c)
                    if (!pivot_col[c]) p.free_slots.emplace_back(r, c);
            p.offset = offset;
            p.count = 1;
            for (std::size_t i = 0; i < p.free_slots.size(); ++i) p.count *= q_;
            offset += p.count;
            patterns_.push_back(std::move(p));

            // next combination
            std::size_t i = k;
            while (i > 0 && pattern[i - 1] == (i - 1) + N - k) --i;
            if (i == 0) break;
            ++pattern[i - 1];
            for (std::size_t j = i; j < k; ++j) pattern[j] = pattern[j - 1] + 1;
        }
        size_ = offset;
    }

    std::uint64_t size() const noexcept { return size_; }
    std::size_t pattern_count() const noexcept { return patterns_.size(); }
    /// First index of pattern p; patterns are contiguous index blocks.
    std::uint64_t pattern_offset(std::size_t p) const noexcept { return patterns_[p].offset; }

    Subspace<N> at(std::uint64_t index) const {
        if (index >= size_) throw std::out_of_range("subspace index out of range");
        auto it = std::upper_bound(patterns_.begin(), patterns_.end(), index,
                                   [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
        const Pattern& p = *std::prev(it);
        std::array<Vec<N>, N> rows{};
        for (std::size_t r = 0; r < k_; ++r) rows[r][p.pivots[r]] = 1;
        std::uint64_t rest = index - p.offset;
        for (std::size_t i = p.free_slots.size(); i-- > 0;) {
            rows[p.free_slots[i].first][p.free_slots[i].second] = static_cast<Elem>(rest % q_);
            rest /= q_;
        }
        return Subspace<N>::from_echelon(std::span<const Vec<N>>(rows.data(), k_));
    }

   private:
    struct Pattern {
        std::array<std::size_t, N> pivots{};
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        std::uint64_t offset = 0;
        std::uint64_t count = 0;
    };
    unsigned q_;
    std::size_t k_;
    std::uint64_t size_ = 0;
    std::vector<Pattern> patterns_;
};

/// Packs coordinates with h bits each (coordinate i at bit h*i). Addition of
/// vectors is XOR of packed words.
template <std::size_t N>
constexpr std::uint32_t pack(const Vec<N>& v, unsigned h) noexcept {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < N; ++i) out |= static_cast<std::uint32_t>(v[i]) << (h * i);
    return out;
}

template <std::size_t N>
constexpr Vec<N> unpack(std::uint32_t word, unsigned h) noexcept {
    Vec<N> v{};
    const std::uint32_t mask = (1u << h) - 1;
    for (std::size_t i = 0; i < N; ++i) v[i] = static_cast<Elem>((word >> (h * i)) & mask);
    return v;
}

/// Hex digits of the coordinates, one per element.
template <std::size_t N>
std::string to_hex(const Vec<N>& v) {
    std::string out(N, '0');
    for (std::size_t i = 0; i < N; ++i) out[i] = to_hex(v[i]);
    return out;
}

template <std::size_t N>
Vec<N> parse_hex_vec(std::string_view text, const Field& field) {
    if (text.size() != N)
        throw std::invalid_argument("expected " + std::to_string(N) + " hex digits, got '" + std::string(text) + "'");
    Vec<N> v{};
    for (std::size_t i = 0; i < N; ++i) v[i] = parse_hex_elem(text[i], field);
    return v;
}

/// "q=<q>:" followed by the 24 hex digits of the row-major 4x6 echelon basis.
std::string serialize_solid(const Field& field, const Solid& s);

struct ParsedSolid {
    unsigned q = 0;
    Solid solid;
};

/// Parses a solid serialization; the basis is re-canonicalized and must have
/// rank 4. The field order comes from the prefix; `modulus` selects the field
/// representation (0 = standard).
ParsedSolid parse_solid(std::string_view text, unsigned modulus = 0);

}  // namespace pencils

#endif  // PENCILS_PROJGEOM_HPP
