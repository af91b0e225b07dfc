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

#ifndef PENCILS_GROUP_HPP
#define PENCILS_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencils/classifier.hpp"
#include "pencils/field.hpp"
#include "pencils/pencil.hpp"
#include "pencils/veronese.hpp"

namespace pencils {

/// Scales A so its first nonzero entry (row-major) is 1: the canonical
/// representative of its PGL(3,q) class. Throws on the zero matrix.
Mat3 normalize_matrix(const Field& field, const Mat3& a);

/// Injective 36-bit key of a matrix (4 bits per entry, row-major).
constexpr std::uint64_t matrix_key(const Mat3& a) noexcept {
    std::uint64_t k = 0;
    for (const auto& row : a)
        for (Elem e : row) k = (k << 4) | e;
    return k;
}

/// Product in PGL(3,q) of normalized matrices, normalized.
Mat3 pgl_multiply(const Field& field, const Mat3& a, const Mat3& b);
/// Order of A in PGL(3,q).
unsigned pgl_order(const Field& field, const Mat3& a);

/// Shards of the PGL(3,q) enumeration: one per normalized first row.
std::size_t pgl3_shard_count(const Field& field) noexcept;
/// Calls fn(const Mat3&) for every normalized invertible matrix whose first
/// row is the shard-th normalized vector of GF(q)^3.
void for_each_pgl3_in_shard(const Field& field, std::size_t shard, const std::function<void(const Mat3&)>& fn);
/// Every element of PGL(3,q), in shard order. q <= 8.
std::vector<Mat3> enumerate_pgl3(const Field& field, unsigned threads = 1);

/// lift(A) maps the solid onto itself.
bool stabilizes(const Field& field, const Mat3& a, const Solid& s);

/**
 * @brief Stabilizer of a solid in PGL(3,q), by exhaustive search.
 *
 * A stabilizes S iff every pencil form f vanishes on lift(A) M for each basis
 * matrix M of S. With A's rows r0, r1, r2 that value is
 *   sum_i f_ii Q_M(r_i) + sum_{i<j} f_ij B_M(r_i, r_j),
 * with Q_M, B_M the quadratic and bilinear forms of M, so the test is
 * evaluated incrementally over the nested row loops. Survivors are confirmed
 * with the full lift. Elements are returned sorted by matrix_key.
 */
std::vector<Mat3> stabilizer_elements(const Field& field, const Solid& s, unsigned threads = 1);
/// Same set, by lifting every group element; test oracle.
std::vector<Mat3> stabilizer_elements_naive(const Field& field, const Solid& s);

/// Structural invariants of a finite matrix group given by its element list.
struct GroupProfile {
    std::uint64_t order = 0;
    bool abelian = false;
    /// element order -> number of elements of that order
    std::map<unsigned, std::uint64_t> order_multiset;
    /// Order of the center of the subgroup generated by the elements of
    /// 2-power order (the normal Sylow 2-subgroup when there is one).
    std::uint64_t center_order = 0;
    /// A generating set found greedily in element order.
    std::vector<Mat3> generators;
};

/// Throws std::invalid_argument if the elements are not closed under products.
GroupProfile profile(const Field& field, const std::vector<Mat3>& elements);

/// What the named stabilizer type of a row pins down at a given q. Unset
/// fields are not determined by the name (or too costly to derive) and are
/// not checked.
struct ExpectedProfile {
    std::uint64_t order = 0;
    std::optional<bool> abelian;
    std::optional<std::map<unsigned, std::uint64_t>> order_multiset;
    std::optional<std::uint64_t> center_order;
};

ExpectedProfile expected_profile(OrbitLabel label, unsigned q);

/// Element-order multisets of some small groups.
std::map<unsigned, std::uint64_t> cyclic_orders(unsigned n);
std::map<unsigned, std::uint64_t> dihedral_orders(unsigned n);  // order 2n
std::map<unsigned, std::uint64_t> direct_product_orders(const std::map<unsigned, std::uint64_t>& a,
                                                        const std::map<unsigned, std::uint64_t>& b);
std::map<unsigned, std::uint64_t> sym4_orders();
/// x -> a x + b over GF(q).
std::map<unsigned, std::uint64_t> affine_line_orders(unsigned q);
/// C_n^2 extended by the coordinate swap.
std::map<unsigned, std::uint64_t> cyclic_wreath_c2_orders(unsigned n);

struct StabilizerReport {
    OrbitLabel label = 0;
    unsigned q = 0;
    std::uint64_t order = 0;
    std::uint64_t expected_order = 0;
    bool abelian = false;
    std::map<unsigned, std::uint64_t> order_multiset;
    std::uint64_t center_order = 0;
    bool pass = false;
    std::string structure;
    std::vector<Mat3> elements;
    std::vector<Mat3> generators;
    /// Names of failed checks, empty on pass.
    std::vector<std::string> failures;
};

StabilizerReport stabilizer_report(const Field& field, OrbitLabel label, unsigned threads = 1);

/// |PGL(3,q)| / |stabilizer|; throws std::logic_error if that is not integral.
std::uint64_t orbit_size(const Field& field, OrbitLabel label, unsigned threads = 1);

/// Field parameters used by the representatives.
struct RepresentativeParams {
    /// Tr(1/gamma) = 1 (rows 7, 10, 12).
    Elem gamma_inv_trace = 0;
    /// Tr(gamma) = 1 (rows 13, 14).
    Elem gamma_trace = 0;
    /// b x^3 + c x + 1 without roots (row 15).
    CubicParams cubic;
};

RepresentativeParams representative_params(const Field& field);

/// The two generating conics of the representative of `label`.
std::pair<Conic, Conic> representative_conics(const Field& field, OrbitLabel label);
PencilSolid representative(const Field& field, OrbitLabel label);

/// Result of checking explicit stabilizer generators against a representative.
struct GeneratorCheck {
    OrbitLabel label = 0;
    unsigned q = 0;
    /// The solid the matrices are checked against.
    Solid solid;
    std::vector<Mat3> matrices;
    /// Per matrix: lift(matrix) fixes the solid.
    std::vector<bool> fixes;
    /// Order of the group the matrices generate.
    std::uint64_t generated_order = 0;
    /// Free-form description of the parameters chosen.
    std::string parameters;
    bool pass = false;
};

/**
 * @brief Instantiates the explicit stabilizer generators known for rows 8,
 * 12, 13, 14 and 15 and checks them.
 *
 * Row 15 uses a field-dependent variant of the representative: for even
 * degree c = 0 with b the first non-cube and g = diag(1, z, z^2), z a
 * primitive cube root of unity; for odd degree c = b with b the first value
 * making b x^3 + b x + 1 rootless, and g = [[1,0,0],[0,z,b],[0,b,z^2+b^2]]
 * with z = b^4 + b^16 + ... + b^(2^(h-1)). The check then also requires that
 * variant to classify as row 15. Throws std::invalid_argument for other labels.
 */
GeneratorCheck verify_generators(const Classifier& classifier, OrbitLabel label);

/// Labels with explicit generators.
std::vector<OrbitLabel> labels_with_generators();

}  // namespace pencils

#endif  // PENCILS_GROUP_HPP
