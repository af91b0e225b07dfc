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

#include "pencils/projgeom.hpp"

#include <charconv>

namespace pencils {

std::uint64_t gaussian_count(unsigned n, unsigned k, unsigned q) {
    if (k > n) throw std::invalid_argument("gaussian_count: k > n");
    // prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1); each partial quotient is integral
    std::uint64_t result = 1;
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t num = 1, den = 1;
        for (unsigned j = 0; j < n - i; ++j) num *= q;
        for (unsigned j = 0; j < i + 1; ++j) den *= q;
        result = result * (num - 1) / (den - 1);
    }
    return result;
}

std::string serialize_solid(const Field& field, const Solid& s) {
    if (s.rank() != 4) throw std::invalid_argument("serialize_solid: subspace is not a solid");
    std::string out = "q=" + std::to_string(field.q()) + ":";
    for (const auto& row : s.rows()) out += to_hex(row);
    return out;
}

ParsedSolid parse_solid(std::string_view text, unsigned modulus) {
    if (text.substr(0, 2) != "q=") throw std::invalid_argument("solid must start with 'q=<q>:'");
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("solid is missing ':' after q");
    unsigned q = 0;
    const auto digits = text.substr(2, colon - 2);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("bad field order in '" + std::string(text) + "'");
    const Field field = modulus == 0 ? Field(q) : Field(q, modulus);

    const auto body = text.substr(colon + 1);
    if (body.size() != 24) throw std::invalid_argument("solid needs 24 hex digits after the colon");
    std::array<Vec6, 4> rows{};
    for (std::size_t r = 0; r < 4; ++r) rows[r] = parse_hex_vec<6>(body.substr(6 * r, 6), field);
    const Solid s = Solid::span(field, std::span<const Vec6>(rows));
    if (s.rank() != 4) throw std::invalid_argument("the 4 rows do not span a solid");
    return {q, s};
}

}  // namespace pencils
