#pragma once

#include <cstdint>
#include <random>

#include "tcsurf/bar.hpp"
#include "tcsurf/group_ring.hpp"
#include "tcsurf/groups.hpp"

namespace tcsurf {

/// Deterministic source for the randomized suites.  Exponents stay in
/// [-6,6]: wide enough to exercise sign flips through odd x-powers, small
/// enough for instant runs.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long long intIn(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    bool flip() { return intIn(0, 1) == 1; }
};

inline KleinElement randomKlein(Rng& rng) {
    return {rng.intIn(-6, 6), rng.intIn(-6, 6)};
}

inline DihedralElement randomDihedral(Rng& rng) {
    return {rng.intIn(-6, 6), static_cast<int>(rng.intIn(0, 1))};
}

inline PairElement<KleinElement> randomPairK(Rng& rng) {
    return {randomKlein(rng), randomKlein(rng)};
}

template <class G, class ElemGen>
RingElement<G, int> randomIntRing(Rng& rng, ElemGen&& gen, int maxTerms = 4) {
    RingElement<G, int> r;
    const long long n = rng.intIn(1, maxTerms);
    for (long long i = 0; i < n; ++i) {
        long long c = rng.intIn(-3, 3);
        if (c == 0) c = 1;
        r.addTerm(gen(rng), static_cast<int>(c));
    }
    return r;
}

/// Random augmentation-zero GF(2) element, built as a sum of differences.
template <class G, class ElemGen>
RingElement<G, Gf2> randomAugZeroGf2(Rng& rng, ElemGen&& gen, int maxPairs = 2) {
    RingElement<G, Gf2> r;
    const long long n = rng.intIn(1, maxPairs);
    for (long long i = 0; i < n; ++i) {
        r.addTerm(gen(rng), Gf2(1));
        r.addTerm(gen(rng), Gf2(1));
    }
    return r;
}

template <class G, class ElemGen>
BarTuple<G> randomTuple(Rng& rng, int degree, ElemGen&& gen) {
    BarTuple<G> t;
    t.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) t.push_back(gen(rng));
    return t;
}

template <class G, class ElemGen>
BarChain<G> randomBarChain(Rng& rng, int degree, ElemGen&& gen, int maxTerms = 3) {
    BarChain<G> c(degree);
    const long long n = rng.intIn(1, maxTerms);
    for (long long i = 0; i < n; ++i) {
        long long coeff = rng.intIn(-2, 2);
        if (coeff == 0) coeff = 1;
        c.addTerm(gen(rng), randomTuple<G>(rng, degree, gen), coeff);
    }
    return c;
}

} // namespace tcsurf
