#pragma once

// Complexes with known homology and small exact oracles shared by the test
// suites.  Everything in here is deterministic and cheap to construct.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hmt/bigint.hpp"
#include "hmt/simplicial.hpp"

namespace fixtures {

using hmt::BigInt;
using hmt::topo::IntMatrix;
using hmt::topo::SimplicialComplex;

// Circle: the 3-cycle.
inline SimplicialComplex circle() {
    SimplicialComplex c(3);
    c.insert({0, 1});
    c.insert({1, 2});
    c.insert({0, 2});
    c.finish();
    return c;
}

// 2-sphere: boundary of the tetrahedron.
inline SimplicialComplex sphere2() {
    SimplicialComplex c(4);
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> face;
        for (int v = 0; v < 4; ++v)
            if (v != skip) face.push_back(v);
        c.insert(face);
    }
    c.finish();
    return c;
}

// Torus: the 7-vertex cyclic triangulation of K_7.  The faces {i, i+1, i+3}
// and {i, i+2, i+3} mod 7 place each of the 21 edges in exactly two of the
// 14 triangles, giving a closed surface with Euler characteristic 0; with
// only 7 vertices that surface can only be the torus.
inline SimplicialComplex torus7() {
    SimplicialComplex c(7);
    for (int i = 0; i < 7; ++i) {
        c.insert({i, (i + 1) % 7, (i + 3) % 7});
        c.insert({i, (i + 2) % 7, (i + 3) % 7});
    }
    c.finish();
    return c;
}

// Projective plane: the minimal triangulation on 6 vertices (10 of the 20
// triangles of K_6, antipodal quotient of the icosahedron).
inline SimplicialComplex projective_plane6() {
    SimplicialComplex c(6);
    const int faces[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                              {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    for (const auto& f : faces) c.insert({f[0], f[1], f[2]});
    c.finish();
    return c;
}

// Klein bottle: a 6x6 grid of squares split into triangles.  The x direction
// wraps straight, the y direction wraps with an x-flip ((i, rows) ~ (-i, 0)),
// which is the standard flat Klein bottle gluing.
inline SimplicialComplex klein_bottle() {
    const int m = 6, rows = 6;
    auto vertex = [&](int i, int j) {
        if (j == rows) {
            i = (m - i) % m;
            j = 0;
        }
        return j * m + (i % m);
    };
    SimplicialComplex c(m * rows);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < m; ++i) {
            const int a = vertex(i, j), b = vertex(i + 1, j);
            const int d = vertex(i + 1, j + 1), e = vertex(i, j + 1);
            c.insert({a, b, d});
            c.insert({a, d, e});
        }
    c.finish();
    return c;
}

// The same grid with both directions wrapping straight: a torus.
inline SimplicialComplex grid_torus(int m, int rows) {
    auto vertex = [&](int i, int j) { return (j % rows) * m + (i % m); };
    SimplicialComplex c(m * rows);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < m; ++i) {
            const int a = vertex(i, j), b = vertex(i + 1, j);
            const int d = vertex(i + 1, j + 1), e = vertex(i, j + 1);
            c.insert({a, b, d});
            c.insert({a, d, e});
        }
    c.finish();
    return c;
}

// Two complexes side by side on a shared vertex range.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex c(a.n_vertices + b.n_vertices);
    for (int p = 1; p <= a.top_dimension(); ++p)
        for (const auto& s : a.simplices(p)) c.insert(s);
    for (int p = 1; p <= b.top_dimension(); ++p)
        for (const auto& s : b.simplices(p)) {
            std::vector<int> shifted = s;
            for (int& v : shifted) v += a.n_vertices;
            c.insert(shifted);
        }
    c.finish();
    return c;
}

// Barycentric subdivision: one vertex per simplex, one k-simplex per chain
// sigma_0 < sigma_1 < ... < sigma_k of proper inclusions.  The result
// triangulates the same space, so its homology must match the input's.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) {
    std::map<std::vector<int>, int> cell_id;
    int next = 0;
    for (int v = 0; v < c.n_vertices; ++v) cell_id[{v}] = next++;
    for (int p = 1; p <= c.top_dimension(); ++p)
        for (const auto& s : c.simplices(p)) cell_id[s] = next++;

    SimplicialComplex out(next);
    for (int p = 1; p <= c.top_dimension(); ++p)
        for (const auto& s : c.simplices(p)) {
            // Every vertex order of s contributes the chain of its sorted
            // prefixes; shorter chains arise as faces during finish().
            std::vector<int> order = s;
            do {
                std::vector<int> chain, prefix;
                for (int v : order) {
                    prefix.push_back(v);
                    std::vector<int> key = prefix;
                    std::sort(key.begin(), key.end());
                    chain.push_back(cell_id.at(key));
                }
                out.insert(chain);
            } while (std::next_permutation(order.begin(), order.end()));
        }
    out.finish();
    return out;
}

namespace detail {

inline BigInt minor_det(const IntMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    if (rows.size() == 1) return BigInt(static_cast<long>(m.at(rows[0], cols[0])));
    BigInt total = 0;
    const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto entry = m.at(rows[0], cols[k]);
        if (entry == 0) continue;
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        const BigInt term = BigInt(static_cast<long>(entry)) * minor_det(m, sub_rows, sub_cols);
        if (k % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

inline void combinations(int n, int k, std::vector<int>& acc,
                         const std::function<void(const std::vector<int>&)>& fn, int start = 0) {
    if (static_cast<int>(acc.size()) == k) {
        fn(acc);
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(acc.size())); ++i) {
        acc.push_back(i);
        combinations(n, k, acc, fn, i + 1);
        acc.pop_back();
    }
}

}  // namespace detail

// Invariant factors via the classical characterization: d_k is the gcd of
// all k x k minors and the factors are the successive quotients d_k/d_{k-1}.
// Exponential in the matrix size; intended for matrices up to about 5x5.
inline std::vector<BigInt> minors_invariant_factors(const IntMatrix& m) {
    std::vector<BigInt> factors;
    BigInt prev = 1;
    const int limit = static_cast<int>(std::min(m.rows, m.cols));
    for (int k = 1; k <= limit; ++k) {
        BigInt g = 0;
        std::vector<int> rows_acc, cols_acc;
        detail::combinations(static_cast<int>(m.rows), k, rows_acc, [&](const std::vector<int>& r) {
            detail::combinations(static_cast<int>(m.cols), k, cols_acc,
                                 [&](const std::vector<int>& c) {
                                     BigInt d = detail::minor_det(m, r, c);
                                     mpz_abs(d.get_mpz_t(), d.get_mpz_t());
                                     mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                                 });
        });
        if (g == 0) break;  // all larger minors vanish as well
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

// Rank over GF(2) by elimination on bit-packed rows.  Entirely independent
// of the Smith reduction, so torsion parity can be checked against it.
inline long long gf2_rank(const IntMatrix& m) {
    const long long words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        static_cast<std::size_t>(m.rows), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    for (long long r = 0; r < m.rows; ++r)
        for (long long c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c / 64)] ^=
                    std::uint64_t{1} << (c % 64);

    long long rank = 0;
    for (long long col = 0; col < m.cols && rank < m.rows; ++col) {
        const auto word = static_cast<std::size_t>(col / 64);
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        long long pivot = -1;
        for (long long r = rank; r < m.rows; ++r)
            if (rows[static_cast<std::size_t>(r)][word] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (long long r = 0; r < m.rows; ++r)
            if (r != rank && (rows[static_cast<std::size_t>(r)][word] & bit))
                for (long long w = 0; w < words; ++w)
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] ^=
                        rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(w)];
        ++rank;
    }
    return rank;
}

}  // namespace fixtures
