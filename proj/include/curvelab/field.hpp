#pragma once

#include <cstdint>
#include <string>

#include "curvelab/fp.hpp"
#include "curvelab/rat.hpp"

namespace curvelab {

// Per-field glue so generic code can manufacture constants and query the
// characteristic from an exemplar element.

inline uint64_t field_char(const Fp& like) { return like.modulus(); }
inline uint64_t field_char(const Rat&) { return 0; }

inline Fp field_zero(const Fp& like) { return Fp(0, like.modulus()); }
inline Rat field_zero(const Rat&) { return Rat(0); }

inline Fp field_one(const Fp& like) { return Fp(1, like.modulus()); }
inline Rat field_one(const Rat&) { return Rat(1); }

inline Fp field_from_int(const Fp& like, int64_t v) { return Fp::from_int(v, like.modulus()); }
inline Rat field_from_int(const Rat&, int64_t v) { return Rat(static_cast<long>(v)); }

inline Fp field_parse(const Fp& like, const std::string& s) {
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    uint64_t v = 0;
    if (pos >= s.size()) throw std::invalid_argument("Fp: bad literal '" + s + "'");
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("Fp: bad literal '" + s + "'");
        v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
        v %= like.modulus();
    }
    Fp x(v, like.modulus());
    return neg ? -x : x;
}
inline Rat field_parse(const Rat&, const std::string& s) { return Rat::parse(s); }

// True when r < char(K) (characteristic 0 passes for every r).
template <class K>
bool below_char(const K& like, uint64_t r) {
    uint64_t c = field_char(like);
    return c == 0 || r < c;
}

}  // namespace curvelab
