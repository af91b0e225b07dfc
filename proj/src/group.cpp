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

#include "pencils/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pencils/parallel.hpp"

namespace pencils {

namespace {

Vec3 vector_at(unsigned q, unsigned index) noexcept {
    return {static_cast<Elem>(index / (q * q)), static_cast<Elem>((index / q) % q), static_cast<Elem>(index % q)};
}

std::vector<Vec3> normalized_vectors(const Field& field) {
    std::vector<Vec3> out;
    for_each_point(field, Subspace<3>::whole(field), [&](const Vec3& v) { out.push_back(v); });
    return out;
}

bool sorted_by_key(const Mat3& a, const Mat3& b) { return matrix_key(a) < matrix_key(b); }

// x M y^T for the symmetric matrix with coordinates m
Vec3 row_times(const Field& f, const Vec3& x, const Vec6& m) noexcept {
    Vec3 out{};
    for (std::size_t j = 0; j < 3; ++j) {
        Elem acc = 0;
        for (std::size_t k = 0; k < 3; ++k) acc ^= f.mul(x[k], m[sym_index(k, j)]);
        out[j] = acc;
    }
    return out;
}

// x M x^T; only the diagonal survives in characteristic 2
Elem quadratic_value(const Field& f, const Vec3& x, const Vec6& m) noexcept {
    return f.mul(m[0], f.sqr(x[0])) ^ f.mul(m[3], f.sqr(x[1])) ^ f.mul(m[5], f.sqr(x[2]));
}

// Subgroup generated by `gens`, as a closure in the ambient element set.
class Closure {
   public:
    explicit Closure(const Field& field) : field_(field) {
        const Mat3 id = identity3();
        seen_.insert(matrix_key(id));
        elements_.push_back(id);
    }

    bool contains(const Mat3& a) const { return seen_.count(matrix_key(a)) != 0; }
    const std::vector<Mat3>& elements() const noexcept { return elements_; }
    const std::vector<Mat3>& generators() const noexcept { return gens_; }

    // ambient: optional membership test that every product must pass
    void add_generator(const Mat3& g, const std::unordered_set<std::uint64_t>* ambient) {
        gens_.push_back(g);
        std::vector<Mat3> queue;
        const std::size_t old = elements_.size();
        for (std::size_t i = 0; i < old; ++i) visit(pgl_multiply(field_, elements_[i], g), queue, ambient);
        while (!queue.empty()) {
            const Mat3 x = queue.back();
            queue.pop_back();
            for (const auto& s : gens_) visit(pgl_multiply(field_, x, s), queue, ambient);
        }
    }

   private:
    void visit(const Mat3& y, std::vector<Mat3>& queue, const std::unordered_set<std::uint64_t>* ambient) {
        const std::uint64_t k = matrix_key(y);
        if (!seen_.insert(k).second) return;
        if (ambient != nullptr && ambient->count(k) == 0)
            throw std::invalid_argument("element list is not closed under multiplication");
        elements_.push_back(y);
        queue.push_back(y);
    }

    const Field& field_;
    std::unordered_set<std::uint64_t> seen_;
    std::vector<Mat3> elements_;
    std::vector<Mat3> gens_;
};

bool commute(const Field& f, const Mat3& a, const Mat3& b) { return pgl_multiply(f, a, b) == pgl_multiply(f, b, a); }

std::uint64_t generated_order(const Field& field, const std::vector<Mat3>& gens) {
    Closure c(field);
    for (const auto& g : gens) c.add_generator(normalize_matrix(field, g), nullptr);
    return c.elements().size();
}

unsigned cyclic_element_order(unsigned n, unsigned exponent) { return n / std::gcd(n, exponent); }

std::map<unsigned, std::uint64_t> gl2_orders(const Field& f) {
    std::map<unsigned, std::uint64_t> out;
    const unsigned q = f.q();
    for (unsigned w = 0; w < q * q * q * q; ++w) {
        const Elem a = static_cast<Elem>(w % q), b = static_cast<Elem>((w / q) % q);
        const Elem c = static_cast<Elem>((w / (q * q)) % q), d = static_cast<Elem>(w / (q * q * q));
        if ((f.mul(a, d) ^ f.mul(b, c)) == 0) continue;
        Elem x = a, y = b, z = c, t = d;
        unsigned k = 1;
        while (!(x == 1 && y == 0 && z == 0 && t == 1)) {
            const Elem nx = f.mul(x, a) ^ f.mul(y, c), ny = f.mul(x, b) ^ f.mul(y, d);
            const Elem nz = f.mul(z, a) ^ f.mul(t, c), nt = f.mul(z, b) ^ f.mul(t, d);
            x = nx, y = ny, z = nz, t = nt;
            ++k;
        }
        ++out[k];
    }
    return out;
}

// x -> A x + b over GF(q)^2: (A, b)^k = (A^k, (I + A + ... + A^(k-1)) b)
std::map<unsigned, std::uint64_t> agl2_orders(const Field& f) {
    std::map<unsigned, std::uint64_t> out;
    const unsigned q = f.q();
    using M2 = std::array<Elem, 4>;
    const auto mul2 = [&](const M2& m, const M2& n) {
        return M2{static_cast<Elem>(f.mul(m[0], n[0]) ^ f.mul(m[1], n[2])),
                  static_cast<Elem>(f.mul(m[0], n[1]) ^ f.mul(m[1], n[3])),
                  static_cast<Elem>(f.mul(m[2], n[0]) ^ f.mul(m[3], n[2])),
                  static_cast<Elem>(f.mul(m[2], n[1]) ^ f.mul(m[3], n[3]))};
    };
    const M2 id{1, 0, 0, 1};
    for (unsigned w = 0; w < q * q * q * q; ++w) {
        const M2 a{static_cast<Elem>(w % q), static_cast<Elem>((w / q) % q), static_cast<Elem>((w / (q * q)) % q),
                   static_cast<Elem>(w / (q * q * q))};
        if ((f.mul(a[0], a[3]) ^ f.mul(a[1], a[2])) == 0) continue;
        M2 power = a, sum = id;
        unsigned k = 1;
        while (power != id) {
            for (std::size_t i = 0; i < 4; ++i) sum[i] ^= power[i];
            power = mul2(power, a);
            ++k;
        }
        for (unsigned b = 0; b < q * q; ++b) {
            const Elem b0 = static_cast<Elem>(b % q), b1 = static_cast<Elem>(b / q);
            const bool fixed = (f.mul(sum[0], b0) ^ f.mul(sum[1], b1)) == 0 && (f.mul(sum[2], b0) ^ f.mul(sum[3], b1)) == 0;
            ++out[fixed ? k : 2 * k];
        }
    }
    return out;
}

}  // namespace

Mat3 normalize_matrix(const Field& field, const Mat3& a) {
    for (const auto& row : a)
        for (Elem e : row)
            if (e != 0) {
                const Elem s = field.inv(e);
                return {scale(field, s, a[0]), scale(field, s, a[1]), scale(field, s, a[2])};
            }
    throw std::invalid_argument("the zero matrix is not a projectivity");
}

Mat3 pgl_multiply(const Field& field, const Mat3& a, const Mat3& b) {
    return normalize_matrix(field, multiply(field, a, b));
}

unsigned pgl_order(const Field& field, const Mat3& a) {
    const Mat3 n = normalize_matrix(field, a);
    const Mat3 id = identity3();
    unsigned k = 1;
    for (Mat3 x = n; x != id; x = pgl_multiply(field, x, n)) ++k;
    return k;
}

std::size_t pgl3_shard_count(const Field& field) noexcept {
    const std::size_t q = field.q();
    return q * q + q + 1;
}

void for_each_pgl3_in_shard(const Field& field, std::size_t shard, const std::function<void(const Mat3&)>& fn) {
    const auto firsts = normalized_vectors(field);
    if (shard >= firsts.size()) throw std::out_of_range("PGL(3,q) shard out of range");
    const unsigned q = field.q();
    const unsigned n = q * q * q;
    Mat3 a{};
    a[0] = firsts[shard];
    for (unsigned i = 0; i < n; ++i) {
        a[1] = vector_at(q, i);
        for (unsigned j = 0; j < n; ++j) {
            a[2] = vector_at(q, j);
            if (det(field, a) != 0) fn(a);
        }
    }
}

std::vector<Mat3> enumerate_pgl3(const Field& field, unsigned threads) {
    if (field.q() > 8) throw std::invalid_argument("enumerate_pgl3: q must be at most 8");
    const std::size_t shards = pgl3_shard_count(field);
    std::vector<std::vector<Mat3>> parts(shards);
    parallel_for_shards(shards, threads, [&](std::size_t s) {
        for_each_pgl3_in_shard(field, s, [&](const Mat3& a) { parts[s].push_back(a); });
    });
    std::vector<Mat3> out;
    out.reserve(pgl3_order(field.q()));
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool stabilizes(const Field& field, const Mat3& a, const Solid& s) { return Lift(field, a).apply(s) == s; }

std::vector<Mat3> stabilizer_elements(const Field& field, const Solid& s, unsigned threads) {
    if (field.q() > 8) throw std::invalid_argument("stabilizer search needs q <= 8");
    if (s.rank() != 4) throw std::invalid_argument("stabilizer_elements: not a solid");
    const unsigned q = field.q();
    const unsigned n = q * q * q;
    const Subspace<6> pencil = annihilator(field, s);

    struct Condition {
        Vec6 f;
        std::size_t basis;
    };
    std::vector<Condition> conds;
    for (std::size_t fi = 0; fi < 2; ++fi)
        for (std::size_t b = 0; b < 4; ++b) conds.push_back({pencil.row(fi), b});

    std::vector<Vec3> vectors(n);
    for (unsigned i = 0; i < n; ++i) vectors[i] = vector_at(q, i);
    // quad[b][r] = Q_b(r)
    std::array<std::vector<Elem>, 4> quad;
    for (std::size_t b = 0; b < 4; ++b) {
        quad[b].resize(n);
        for (unsigned i = 0; i < n; ++i) quad[b][i] = quadratic_value(field, vectors[i], s.row(b));
    }
    const auto firsts = normalized_vectors(field);

    std::vector<std::vector<Mat3>> parts(firsts.size());
    parallel_for_shards(firsts.size(), threads, [&](std::size_t shard) {
        const Vec3& r0 = firsts[shard];
        std::array<Vec3, 4> r0m;
        std::array<Elem, 4> q0;
        for (std::size_t b = 0; b < 4; ++b) {
            r0m[b] = row_times(field, r0, s.row(b));
            q0[b] = quadratic_value(field, r0, s.row(b));
        }
        std::array<Elem, 8> k{};
        std::array<Vec3, 8> lin{};
        std::array<Elem, 8> f22{};
        for (std::size_t c = 0; c < conds.size(); ++c) f22[c] = conds[c].f[5];

        for (unsigned i1 = 0; i1 < n; ++i1) {
            const Vec3& r1 = vectors[i1];
            std::array<Vec3, 4> r1m;
            std::array<Elem, 4> b01;
            for (std::size_t b = 0; b < 4; ++b) {
                r1m[b] = row_times(field, r1, s.row(b));
                b01[b] = dot(field, r0m[b], r1);
            }
            for (std::size_t c = 0; c < conds.size(); ++c) {
                const Vec6& f = conds[c].f;
                const std::size_t b = conds[c].basis;
                k[c] = field.mul(f[0], q0[b]) ^ field.mul(f[3], quad[b][i1]) ^ field.mul(f[1], b01[b]);
                lin[c] = scale(field, f[2], r0m[b]) + scale(field, f[4], r1m[b]);
            }
            for (unsigned i2 = 0; i2 < n; ++i2) {
                bool ok = true;
                for (std::size_t c = 0; c < conds.size() && ok; ++c) {
                    const Elem v = k[c] ^ field.mul(f22[c], quad[conds[c].basis][i2]) ^ dot(field, lin[c], vectors[i2]);
                    ok = v == 0;
                }
                if (!ok) continue;
                const Mat3 a{r0, r1, vectors[i2]};
                if (det(field, a) == 0) continue;
                if (!stabilizes(field, a, s))
                    throw std::logic_error("stabilizer filter accepted a matrix that does not fix the solid");
                parts[shard].push_back(a);
            }
        }
    });

    std::vector<Mat3> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), sorted_by_key);
    return out;
}

std::vector<Mat3> stabilizer_elements_naive(const Field& field, const Solid& s) {
    std::vector<Mat3> out;
    for (std::size_t shard = 0; shard < pgl3_shard_count(field); ++shard)
        for_each_pgl3_in_shard(field, shard, [&](const Mat3& a) {
            if (stabilizes(field, a, s)) out.push_back(a);
        });
    std::sort(out.begin(), out.end(), sorted_by_key);
    return out;
}

GroupProfile profile(const Field& field, const std::vector<Mat3>& elements) {
    GroupProfile p;
    p.order = elements.size();
    std::unordered_set<std::uint64_t> ambient;
    for (const auto& e : elements) ambient.insert(matrix_key(normalize_matrix(field, e)));
    if (ambient.size() != elements.size()) throw std::invalid_argument("profile: repeated elements");
    if (ambient.count(matrix_key(identity3())) == 0) throw std::invalid_argument("profile: identity missing");

    std::vector<Mat3> sorted;
    sorted.reserve(elements.size());
    for (const auto& e : elements) sorted.push_back(normalize_matrix(field, e));
    std::sort(sorted.begin(), sorted.end(), sorted_by_key);

    Closure whole(field);
    for (const auto& e : sorted)
        if (!whole.contains(e)) whole.add_generator(e, &ambient);
    if (whole.elements().size() != elements.size()) throw std::logic_error("profile: closure size mismatch");
    p.generators = whole.generators();

    p.abelian = true;
    for (std::size_t i = 0; i < p.generators.size() && p.abelian; ++i)
        for (std::size_t j = i + 1; j < p.generators.size() && p.abelian; ++j)
            p.abelian = commute(field, p.generators[i], p.generators[j]);

    Closure two_part(field);
    for (const auto& e : sorted) {
        const unsigned k = pgl_order(field, e);
        ++p.order_multiset[k];
        if ((k & (k - 1)) == 0 && !two_part.contains(e)) two_part.add_generator(e, &ambient);
    }
    for (const auto& z : two_part.elements()) {
        const bool central = std::all_of(two_part.generators().begin(), two_part.generators().end(),
                                         [&](const Mat3& g) { return commute(field, z, g); });
        if (central) ++p.center_order;
    }
    return p;
}

std::map<unsigned, std::uint64_t> cyclic_orders(unsigned n) {
    std::map<unsigned, std::uint64_t> out;
    for (unsigned i = 0; i < n; ++i) ++out[cyclic_element_order(n, i)];
    return out;
}

std::map<unsigned, std::uint64_t> dihedral_orders(unsigned n) {
    auto out = cyclic_orders(n);
    out[2] += n;
    return out;
}

std::map<unsigned, std::uint64_t> direct_product_orders(const std::map<unsigned, std::uint64_t>& a,
                                                        const std::map<unsigned, std::uint64_t>& b) {
    std::map<unsigned, std::uint64_t> out;
    for (const auto& [oa, na] : a)
        for (const auto& [ob, nb] : b) out[std::lcm(oa, ob)] += na * nb;
    return out;
}

std::map<unsigned, std::uint64_t> sym4_orders() { return {{1, 1}, {2, 9}, {3, 8}, {4, 6}}; }

std::map<unsigned, std::uint64_t> affine_line_orders(unsigned q) {
    std::map<unsigned, std::uint64_t> out{{1, 1}};
    if (q > 1) out[2] += q - 1;
    for (const auto& [d, count] : cyclic_orders(q - 1))
        if (d > 1) out[d] += count * q;
    return out;
}

std::map<unsigned, std::uint64_t> cyclic_wreath_c2_orders(unsigned n) {
    std::map<unsigned, std::uint64_t> out;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            ++out[std::lcm(cyclic_element_order(n, a), cyclic_element_order(n, b))];
            // ((a,b) s)^2 = (a+b, a+b)
            ++out[2 * cyclic_element_order(n, (a + b) % n)];
        }
    return out;
}

ExpectedProfile expected_profile(OrbitLabel label, unsigned q) {
    check_label(label);
    const auto table = expected_table(q);
    ExpectedProfile e;
    e.order = table[label - 1].stabilizer_order;
    const Field field(q);
    const auto c2 = cyclic_orders(2);
    switch (label) {
        case 1:
            if (q == 2) e.order_multiset = dihedral_orders(4), e.abelian = false;
            break;
        case 2:
            e.center_order = q;
            if (q == 2) e.order_multiset = dihedral_orders(4), e.abelian = false;
            break;
        case 3:
            e.order_multiset = agl2_orders(field);
            e.abelian = false;
            break;
        case 4:
            e.order_multiset = gl2_orders(field);
            e.abelian = false;
            break;
        case 5:
            if (q == 2) e.order_multiset = direct_product_orders(c2, c2), e.abelian = true;
            break;
        case 6:
            e.order_multiset = cyclic_wreath_c2_orders(q - 1);
            e.abelian = q == 2;
            break;
        case 7:
            e.order_multiset = direct_product_orders(dihedral_orders(q + 1), cyclic_orders(q - 1));
            e.abelian = false;
            break;
        case 8:
        case 10:
            e.order_multiset = direct_product_orders(cyclic_orders(q - 1), c2);
            e.abelian = true;
            break;
        case 9:
            e.order_multiset = sym4_orders();
            e.abelian = false;
            break;
        case 11:
            e.order_multiset = affine_line_orders(q);
            e.abelian = q == 2;
            break;
        case 12:
            e.order_multiset = direct_product_orders(c2, c2);
            e.abelian = true;
            break;
        case 13:
            e.order_multiset = dihedral_orders(4);
            e.abelian = false;
            break;
        case 14:
            e.order_multiset = cyclic_orders(4);
            e.abelian = true;
            break;
        case 15:
            e.order_multiset = cyclic_orders(3);
            e.abelian = true;
            break;
        default:
            break;
    }
    return e;
}

StabilizerReport stabilizer_report(const Field& field, OrbitLabel label, unsigned threads) {
    check_label(label);
    const PencilSolid rep = representative(field, label);
    const ExpectedProfile expected = expected_profile(label, field.q());

    StabilizerReport r;
    r.label = label;
    r.q = field.q();
    r.structure = expected_table(field.q())[label - 1].structure;
    r.elements = stabilizer_elements(field, rep.solid, threads);
    const GroupProfile p = profile(field, r.elements);
    r.order = p.order;
    r.expected_order = expected.order;
    r.abelian = p.abelian;
    r.order_multiset = p.order_multiset;
    r.center_order = p.center_order;
    r.generators = p.generators;

    if (r.order != expected.order) r.failures.push_back("order");
    if (expected.abelian && *expected.abelian != p.abelian) r.failures.push_back("abelian");
    if (expected.order_multiset && *expected.order_multiset != p.order_multiset)
        r.failures.push_back("order_multiset");
    if (expected.center_order && *expected.center_order != p.center_order) r.failures.push_back("center_order");
    r.pass = r.failures.empty();
    return r;
}

std::uint64_t orbit_size(const Field& field, OrbitLabel label, unsigned threads) {
    const auto stab = stabilizer_elements(field, representative(field, label).solid, threads).size();
    const std::uint64_t g = pgl3_order(field.q());
    if (stab == 0 || g % stab != 0) throw std::logic_error("stabilizer order does not divide |PGL(3,q)|");
    return g / stab;
}

RepresentativeParams representative_params(const Field& field) {
    return {find_gamma_inv_trace(field), find_gamma_trace(field), find_irreducible_cubic_params(field)};
}

std::pair<Conic, Conic> representative_conics(const Field& f, OrbitLabel label) {
    check_label(label);
    const RepresentativeParams p = representative_params(f);
    const Elem g = p.gamma_inv_trace;
    const Elem t = p.gamma_trace;
    const Elem b = p.cubic.b, c = p.cubic.c;
    // coefficient order (a00, a01, a02, a11, a12, a22)
    const Vec6 x0x1_x2sq{0, 1, 0, 0, 0, 1};
    std::array<Vec6, 2> v;
    switch (label) {
        case 1:
            v = {Vec6{0, 0, 0, 1, 0, 1}, Vec6{0, 0, 0, 0, 1, 0}};
            break;
        case 2:
            v = {Vec6{0, 0, 0, 0, 0, 1}, Vec6{0, 0, 0, 0, 1, 0}};
            break;
        case 3:
            v = {Vec6{0, 0, 0, 1, 0, 0}, Vec6{0, 0, 0, 0, 0, 1}};
            break;
        case 4:
            v = {Vec6{0, 1, 0, 0, 0, 0}, Vec6{0, 0, 0, 0, 1, 0}};
            break;
        case 5:
            v = {x0x1_x2sq, Vec6{1, 0, 0, 0, 0, 0}};
            break;
        case 6:
            v = {x0x1_x2sq, Vec6{0, 0, 0, 0, 0, 1}};
            break;
        case 7:
            v = {x0x1_x2sq, Vec6{1, 0, 0, 1, 0, f.sqr(g)}};
            break;
        case 8:
            v = {x0x1_x2sq, Vec6{0, 1, 1, 0, 1, 1}};
            break;
        case 9:
            v = {Vec6{1, 1, 0, 0, 0, 0}, Vec6{0, 0, 0, 0, 1, 1}};
            break;
        case 10:
            v = {x0x1_x2sq, Vec6{0, 1, 0, 1, g, 0}};
            break;
        case 11:
            v = {x0x1_x2sq, Vec6{0, 0, 0, 0, 1, 0}};
            break;
        case 12:
            v = {x0x1_x2sq, Vec6{0, 0, 1, 0, 1, g}};
            break;
        case 13:
            v = {Vec6{t, 1, 0, 1, 0, 0}, Vec6{t, 0, 1, 0, 0, 1}};
            break;
        case 14:
            v = {Vec6{0, 0, 1, 1, 0, t}, Vec6{t, 1, 0, 1, 0, 0}};
            break;
        default:
            v = {x0x1_x2sq, Vec6{0, 0, 1, b, 0, c}};
            break;
    }
    return {Conic(f, v[0]), Conic(f, v[1])};
}

PencilSolid representative(const Field& field, OrbitLabel label) {
    const auto [c1, c2] = representative_conics(field, label);
    return from_conics(field, c1, c2);
}

std::vector<OrbitLabel> labels_with_generators() { return {8, 12, 13, 14, 15}; }

GeneratorCheck verify_generators(const Classifier& classifier, OrbitLabel label) {
    const Field& f = classifier.field();
    GeneratorCheck r;
    r.label = label;
    r.q = f.q();
    std::uint64_t expected_generated = 0;

    switch (label) {
        case 8: {
            const Elem w = f.primitive_element();
            const Elem w1 = static_cast<Elem>(w ^ 1);
            r.solid = representative(f, 8).solid;
            r.matrices = {Mat3{Vec3{0, 1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}},
                          Mat3{Vec3{1, 0, w1}, Vec3{0, 1, w1}, Vec3{0, 0, w}}};
            r.parameters = std::string("omega=") + to_hex(w);
            expected_generated = 2 * (f.q() - 1);
            break;
        }
        case 12:
            r.solid = representative(f, 12).solid;
            r.matrices = {Mat3{Vec3{0, 1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}}};
            r.parameters = std::string("gamma=") + to_hex(find_gamma_inv_trace(f));
            expected_generated = 2;
            break;
        case 13:
            r.solid = representative(f, 13).solid;
            r.matrices = {Mat3{Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, 0, 1}},
                          Mat3{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 0, 1}},
                          Mat3{Vec3{1, 0, 0}, Vec3{0, 0, 1}, Vec3{0, 1, 0}}};
            r.parameters = std::string("gamma=") + to_hex(find_gamma_trace(f));
            expected_generated = 8;
            break;
        case 14: {
            const Elem t = find_gamma_trace(f);
            r.solid = representative(f, 14).solid;
            r.matrices = {Mat3{Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, f.inv(t), 1}}};
            r.parameters = std::string("gamma=") + to_hex(t);
            expected_generated = 4;
            break;
        }
        case 15: {
            Elem b = 0, c = 0, zeta = 0;
            Mat3 g{};
            if (f.degree() % 2 == 0) {
                for (unsigned x = 1; x < f.q() && b == 0; ++x)
                    if (!f.is_cube(static_cast<Elem>(x))) b = static_cast<Elem>(x);
                for (unsigned x = 1; x < f.q() && zeta == 0; ++x)
                    if (f.order(static_cast<Elem>(x)) == 3) zeta = static_cast<Elem>(x);
                if (b == 0 || zeta == 0) throw std::logic_error("no non-cube or cube root of unity");
                g = Mat3{Vec3{1, 0, 0}, Vec3{0, zeta, 0}, Vec3{0, 0, f.sqr(zeta)}};
            } else {
                for (unsigned x = 1; x < f.q() && b == 0; ++x)
                    if (cubic_is_rootless(f, static_cast<Elem>(x), static_cast<Elem>(x))) b = static_cast<Elem>(x);
                if (b == 0) throw std::logic_error("no b with b x^3 + b x + 1 rootless");
                c = b;
                // z = sum of b^(2^(2i)) for 1 <= i <= (h-1)/2
                Elem power = b;
                for (unsigned i = 1; 2 * i <= f.degree() - 1; ++i) {
                    power = f.sqr(f.sqr(power));
                    zeta ^= power;
                }
                g = Mat3{Vec3{1, 0, 0}, Vec3{0, zeta, b}, Vec3{0, b, static_cast<Elem>(f.sqr(zeta) ^ f.sqr(b))}};
            }
            const PencilSolid variant =
                from_conics(f, Conic(f, Vec6{0, 1, 0, 0, 0, 1}), Conic(f, Vec6{0, 0, 1, b, 0, c}));
            r.solid = variant.solid;
            r.matrices = {g};
            r.parameters = std::string("b=") + to_hex(b) + " c=" + to_hex(c) + " zeta=" + to_hex(zeta);
            expected_generated = 3;
            break;
        }
        default:
            throw std::invalid_argument("no explicit generators for " + label_name(label));
    }

    bool all = true;
    for (const auto& m : r.matrices) {
        const bool ok = det(f, m) != 0 && stabilizes(f, m, r.solid);
        r.fixes.push_back(ok);
        all = all && ok;
    }
    r.generated_order = all ? generated_order(f, r.matrices) : 0;
    r.pass = all && r.generated_order == expected_generated;
    if (label == 15 && r.pass) r.pass = classifier.classify(PencilSolid::from_solid(f, r.solid)).label == 15;
    return r;
}

}  // namespace pencils
