#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hmt {

// SplitMix64 generator with counter-based stream derivation.  Every sampled
// artifact in the project is a pure function of (seed, stream index), so
// results never depend on thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x478bd1e4d1320a5bULL)) {}

    // Independent stream for a numbered sub-task of a seeded computation.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng r(0);
        r.state_ = mix(mix(seed) + 0x9e3779b97f4a7c15ULL * (stream + 1));
        return r;
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Unbiased uniform draw from {0, ..., n-1} (rejection below 2^64 mod n).
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[bounded(i)]);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace hmt
