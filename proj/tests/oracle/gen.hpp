#pragma once

// Seeded generators for property tests (splitmix64, independent of the library's Rng).

#include <cstdint>

#include "shearscope/poly.hpp"

namespace gen {

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi]; modulo bias is irrelevant for test inputs.
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::uint64_t s_;
};

inline shearscope::Rational coefficient(SplitMix& g, long bound) {
    long n = 0;
    while (n == 0) n = g.range(-bound, bound);
    return shearscope::Rational(n, g.range(1, bound));
}

// Up to `terms` monomials with total degree in [lo, hi].
inline shearscope::Poly poly(SplitMix& g, unsigned lo, unsigned hi, unsigned terms = 5, long bound = 7) {
    shearscope::Poly p;
    const long count = g.range(0, terms);
    for (long k = 0; k < count; ++k) {
        const auto d = static_cast<std::uint32_t>(g.range(lo, hi));
        const auto ex = static_cast<std::uint32_t>(g.range(0, d));
        p.add_term({ex, d - ex}, coefficient(g, bound));
    }
    return p;
}

inline shearscope::PolyMap map(SplitMix& g, unsigned hi, unsigned terms = 4, long bound = 5) {
    return {poly(g, 0, hi, terms, bound), poly(g, 0, hi, terms, bound)};
}

// Homogeneous of degree d.
inline shearscope::Poly homogeneous(SplitMix& g, unsigned d, unsigned terms = 4, long bound = 7) {
    shearscope::Poly p;
    for (unsigned k = 0; k < terms; ++k) {
        const auto ex = static_cast<std::uint32_t>(g.range(0, d));
        p.add_term({ex, d - ex}, coefficient(g, bound));
    }
    return p;
}

}  // namespace gen
