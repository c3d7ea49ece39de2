#pragma once

#include <vector>

#include "hmt/bigint.hpp"
#include "hmt/simplicial.hpp"

namespace hmt::topo {

// Invariant factors d_1 | d_2 | ... | d_r (all >= 1) and the rank r of an
// integer matrix under unimodular row/column equivalence.
struct SmithResult {
    std::vector<BigInt> invariant_factors;
    long long rank = 0;
};

// Exact Smith normal form.  Pivots are chosen by minimal nonzero absolute
// value to limit entry growth; reduction runs in checked 64-bit arithmetic
// and restarts in big integers on overflow, so results are certified for any
// input.
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace hmt::topo
