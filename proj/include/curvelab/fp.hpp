#pragma once

#include <cstdint>
#include <string>

#include "curvelab/errors.hpp"

namespace curvelab {

// Element of F_p for a runtime prime p. The modulus travels with the value so
// elements from different fields cannot be mixed silently.
class Fp {
public:
    Fp() = default;
    Fp(uint64_t value, uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(int64_t value, uint64_t p) {
        int64_t m = value % static_cast<int64_t>(p);
        if (m < 0) m += static_cast<int64_t>(p);
        return Fp(static_cast<uint64_t>(m), p);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        uint64_t s = v_ + o.v_;
        if (s >= p_ || s < v_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(mulmod(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (v_ == 0) throw DivideByZeroError("Fp: inverse of zero");
        // extended Euclid on (v_, p_)
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(v_);
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<int64_t>(p_);
        return raw(static_cast<uint64_t>(t), p_);
    }

    Fp pow(uint64_t e) const {
        Fp b = *this, r = raw(1 % p_, p_);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    // total order for deterministic sorting (same field assumed)
    bool operator<(const Fp& o) const { return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }

    static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }

private:
    static Fp raw(uint64_t v, uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw FieldMismatchError("Fp: mixed moduli");
    }

    uint64_t v_ = 0;
    uint64_t p_ = 0;
};

// Two-tier prime policy: small primes for exhaustive searches, a ~2^61 prime
// for generic-position arithmetic.
inline constexpr uint64_t kSearchPrimeMin = 101;
inline constexpr uint64_t kSearchPrimeMax = 65537;
inline constexpr uint64_t kAlgebraPrime = (uint64_t(1) << 61) - 1;  // Mersenne prime

inline bool is_search_prime_size(uint64_t p) { return p <= kSearchPrimeMax; }

}  // namespace curvelab
