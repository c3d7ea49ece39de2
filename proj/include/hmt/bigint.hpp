#pragma once

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace hmt {

// Arbitrary-precision integer.  All counting results that can exceed 64 bits
// are carried in this type; doubles only appear in clearly-labelled estimates.
using BigInt = mpz_class;

// f[i] = i! for i = 0..max_n.
inline std::vector<BigInt> factorial_table(int max_n) {
    std::vector<BigInt> f(static_cast<std::size_t>(max_n) + 1);
    f[0] = 1;
    for (int i = 1; i <= max_n; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i) - 1] * i;
    return f;
}

// Natural log of a positive big integer, exact to double rounding.
inline double log_bigint(const BigInt& v) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace hmt
