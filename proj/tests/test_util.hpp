#pragma once

#include <random>
#include <vector>

#include "curvelab/field.hpp"
#include "curvelab/unipoly.hpp"

namespace curvelab::testutil {

inline Fp rand_fp(std::mt19937_64& rng, uint64_t p) { return Fp(rng() % p, p); }

inline Fp rand_fp_nonzero(std::mt19937_64& rng, uint64_t p) {
    return Fp(1 + rng() % (p - 1), p);
}

inline Rat rand_rat(std::mt19937_64& rng, long bound = 50) {
    long n = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long d = 1 + static_cast<long>(rng() % bound);
    return Rat(n, d);
}

template <class K>
UniPoly<K> rand_unipoly(std::mt19937_64& rng, int deg, const K& like, uint64_t p) {
    std::vector<K> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Fp(rng() % p, p));
    return UniPoly<K>::from_coeffs(c, like);
}

}  // namespace curvelab::testutil
