#pragma once

#include <vector>

#include "hmt/bigint.hpp"
#include "hmt/simplicial.hpp"
#include "hmt/smith.hpp"

#include "json.hpp"

namespace hmt::topo {

struct DegreeHomology {
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors >= 2, each dividing the next
};

// Integral homology per degree 0..top_dimension.
struct HomologyProfile {
    std::vector<DegreeHomology> degrees;

    long long betti(int p) const;
    const std::vector<BigInt>& torsion(int p) const;
    long long euler_characteristic() const;
    double log_torsion(int p) const;  // natural log of the torsion order, 0 if free
};

// Exact integral homology via Smith normal form of the boundary matrices:
// betti_p = #p-simplices - rank d_p - rank d_{p+1}, torsion in degree p from
// the invariant factors of d_{p+1}.
HomologyProfile homology(const SimplicialComplex& c, unsigned n_threads = 1);

// {"0": {"betti": 1, "torsion": []}, "1": {"betti": 0, "torsion": ["2"]}, ...}
// with torsion orders as decimal strings.
nlohmann::json profile_to_json(const HomologyProfile& p);

}  // namespace hmt::topo
