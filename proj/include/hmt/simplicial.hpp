#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

namespace hmt::topo {

// Dense integer matrix, row-major.  Boundary matrices have entries in
// {-1, 0, 1}; Smith reduction works on arbitrary int64 input.
struct IntMatrix {
    long long rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(long long r, long long c)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::int64_t& at(long long r, long long c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    std::int64_t at(long long r, long long c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
};

// Abstract simplicial complex on vertices {0..n_vertices-1}.  Simplices of
// dimension p >= 1 are stored as strictly increasing vertex tuples, sorted
// lexicographically per dimension; all vertices are implicitly present.
class SimplicialComplex {
public:
    int n_vertices = 0;

    SimplicialComplex() = default;
    explicit SimplicialComplex(int vertices) : n_vertices(vertices) {}

    // Builder interface: insert tolerates unsorted tuples and duplicates;
    // finish() sorts, dedupes, closes under faces, and validates.
    void insert(std::vector<int> simplex);
    void finish();

    int top_dimension() const;             // 0 for a complex with only vertices
    long long count(int p) const;          // number of p-simplices
    const std::vector<std::vector<int>>& simplices(int p) const;  // p >= 1

    int max_vertex_degree() const;         // in the 1-skeleton
    long long euler_characteristic() const;  // alternating simplex count

    // Vertex ids in range, tuples strictly increasing, lists sorted and
    // duplicate-free, closed under faces.
    void validate() const;

private:
    bool face_closed() const;

    // by_dim_[p-1] holds the p-simplices.
    std::vector<std::vector<std::vector<int>>> by_dim_;
};

// Boundary operator from p-chains to (p-1)-chains: rows are (p-1)-simplices
// (vertices for p = 1), columns are p-simplices, entries alternate in sign.
IntMatrix boundary_matrix(const SimplicialComplex& c, int p);

// File format: {"vertices": n, "simplices": {"1": [[i,j],...], "2": [...]}}.
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

}  // namespace hmt::topo
