#include "hmt/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hmt/errors.hpp"

namespace hmt::topo {

void SimplicialComplex::insert(std::vector<int> simplex) {
    std::sort(simplex.begin(), simplex.end());
    if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
        throw ConfigError("simplex has a repeated vertex");
    if (simplex.empty()) throw ConfigError("empty simplex");
    if (simplex.front() < 0 || simplex.back() >= n_vertices)
        throw ConfigError("simplex vertex out of range");
    const std::size_t p = simplex.size() - 1;
    if (p == 0) return;  // vertices are implicit
    if (by_dim_.size() < p) by_dim_.resize(p);
    by_dim_[p - 1].push_back(std::move(simplex));
}

void SimplicialComplex::finish() {
    for (auto& list : by_dim_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    // Close under faces, top dimension downward: every facet of a p-simplex
    // joins the (p-1)-list.
    for (int p = static_cast<int>(by_dim_.size()); p >= 2; --p) {
        std::set<std::vector<int>> faces(by_dim_[p - 2].begin(), by_dim_[p - 2].end());
        for (const auto& s : by_dim_[p - 1]) {
            std::vector<int> face(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                face.clear();
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != skip) face.push_back(s[k]);
                faces.insert(face);
            }
        }
        by_dim_[p - 2].assign(faces.begin(), faces.end());
    }
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
    validate();
}

int SimplicialComplex::top_dimension() const { return static_cast<int>(by_dim_.size()); }

long long SimplicialComplex::count(int p) const {
    if (p < 0) throw ConfigError("dimension must be >= 0");
    if (p == 0) return n_vertices;
    if (p > top_dimension()) return 0;
    return std::ssize(by_dim_[p - 1]);
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int p) const {
    if (p < 1 || p > top_dimension()) throw ConfigError("no simplex list for this dimension");
    return by_dim_[p - 1];
}

int SimplicialComplex::max_vertex_degree() const {
    std::vector<int> deg(n_vertices, 0);
    if (top_dimension() >= 1)
        for (const auto& e : by_dim_[0]) {
            ++deg[e[0]];
            ++deg[e[1]];
        }
    int best = 0;
    for (int d : deg) best = std::max(best, d);
    return best;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = n_vertices;
    long long sign = -1;
    for (const auto& list : by_dim_) {
        chi += sign * std::ssize(list);
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::face_closed() const {
    for (int p = static_cast<int>(by_dim_.size()); p >= 2; --p) {
        const auto& lower = by_dim_[p - 2];
        for (const auto& s : by_dim_[p - 1]) {
            std::vector<int> face(s.size() - 1);
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                face.clear();
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != skip) face.push_back(s[k]);
                if (!std::binary_search(lower.begin(), lower.end(), face)) return false;
            }
        }
    }
    return true;
}

void SimplicialComplex::validate() const {
    if (n_vertices < 0) throw ConfigError("negative vertex count");
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        const auto& list = by_dim_[d];
        for (const auto& s : list) {
            if (s.size() != d + 2) throw InternalError("simplex in wrong dimension list");
            for (std::size_t k = 0; k + 1 < s.size(); ++k)
                if (s[k] >= s[k + 1]) throw ConfigError("simplex tuple not strictly increasing");
            if (s.front() < 0 || s.back() >= n_vertices) throw ConfigError("simplex vertex out of range");
        }
        if (!std::is_sorted(list.begin(), list.end())) throw InternalError("simplex list not sorted");
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InternalError("duplicate simplex");
    }
    if (!face_closed()) throw ConfigError("complex is not closed under faces");
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int p) {
    if (p < 1 || p > c.top_dimension()) throw ConfigError("boundary dimension out of range");
    const auto& cols = c.simplices(p);
    const long long n_rows = c.count(p - 1);
    IntMatrix m(n_rows, std::ssize(cols));

    const std::vector<std::vector<int>>* lower = p >= 2 ? &c.simplices(p - 1) : nullptr;
    std::vector<int> face;
    for (long long j = 0; j < m.cols; ++j) {
        const auto& s = cols[j];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            long long row;
            if (p == 1) {
                row = s[1 - skip];  // faces of an edge are its two vertices
            } else {
                face.clear();
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != skip) face.push_back(s[k]);
                const auto it = std::lower_bound(lower->begin(), lower->end(), face);
                if (it == lower->end() || *it != face)
                    throw InternalError("face missing from a validated complex");
                row = it - lower->begin();
            }
            m.at(row, j) = (skip % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    SimplicialComplex c;
    try {
        c.n_vertices = j.at("vertices").get<int>();
        if (j.contains("simplices"))
            for (const auto& [dim, list] : j.at("simplices").items()) {
                if (dim.empty() || dim.find_first_not_of("0123456789") != std::string::npos)
                    throw ConfigError("simplex dimension keys must be nonnegative integers");
                for (const auto& tuple : list) {
                    auto s = tuple.get<std::vector<int>>();
                    if (std::ssize(s) != std::stoi(dim) + 1)
                        throw ConfigError("simplex length does not match its dimension key");
                    c.insert(std::move(s));
                }
            }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed complex JSON: ") + e.what());
    }
    c.finish();
    return c;
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json simplices = nlohmann::json::object();
    for (int p = 1; p <= c.top_dimension(); ++p)
        simplices[std::to_string(p)] = c.simplices(p);
    return nlohmann::json{{"vertices", c.n_vertices}, {"simplices", simplices}};
}

}  // namespace hmt::topo
