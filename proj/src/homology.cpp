#include "hmt/homology.hpp"

#include "hmt/errors.hpp"
#include "hmt/parallel.hpp"

namespace hmt::topo {

long long HomologyProfile::betti(int p) const {
    if (p < 0) throw ConfigError("degree must be >= 0");
    return p < std::ssize(degrees) ? degrees[p].betti : 0;
}

const std::vector<BigInt>& HomologyProfile::torsion(int p) const {
    static const std::vector<BigInt> kEmpty;
    if (p < 0) throw ConfigError("degree must be >= 0");
    return p < std::ssize(degrees) ? degrees[p].torsion : kEmpty;
}

long long HomologyProfile::euler_characteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (const auto& d : degrees) {
        chi += sign * d.betti;
        sign = -sign;
    }
    return chi;
}

double HomologyProfile::log_torsion(int p) const {
    double total = 0.0;
    for (const auto& f : torsion(p)) total += log_bigint(f);
    return total;
}

HomologyProfile homology(const SimplicialComplex& c, unsigned n_threads) {
    c.validate();
    const int top = c.top_dimension();

    // One Smith reduction per boundary operator; they are independent.
    std::vector<SmithResult> snf(top + 1);
    if (top >= 1)
        parallel_for(top, n_threads,
                     [&](std::size_t i) { snf[i + 1] = smith_normal_form(boundary_matrix(c, static_cast<int>(i) + 1)); });

    HomologyProfile profile;
    profile.degrees.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        auto& deg = profile.degrees[p];
        const long long rank_p = p >= 1 ? snf[p].rank : 0;
        const long long rank_next = p + 1 <= top ? snf[p + 1].rank : 0;
        deg.betti = c.count(p) - rank_p - rank_next;
        if (deg.betti < 0) throw InternalError("negative Betti number");
        if (p + 1 <= top)
            for (const auto& f : snf[p + 1].invariant_factors)
                if (f > 1) deg.torsion.push_back(f);
    }
    if (profile.euler_characteristic() != c.euler_characteristic())
        throw InternalError("Euler characteristic mismatch between homology and simplex counts");
    return profile;
}

nlohmann::json profile_to_json(const HomologyProfile& p) {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t d = 0; d < p.degrees.size(); ++d) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& f : p.degrees[d].torsion) torsion.push_back(f.get_str());
        out[std::to_string(d)] = {{"betti", p.degrees[d].betti}, {"torsion", torsion}};
    }
    return out;
}

}  // namespace hmt::topo
