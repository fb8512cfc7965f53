#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "curvelab/errors.hpp"

namespace curvelab {

// Arbitrary-precision rational, always stored reduced with positive denominator.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw DivideByZeroError("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return q_ == 0; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DivideByZeroError("Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero()) throw DivideByZeroError("Rat: inverse of zero");
        return Rat(mpq_class(1 / q_));
    }

    Rat pow(uint64_t e) const {
        Rat b = *this, r(1);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }

    const mpq_class& mpq() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

// Exact rational square root when one exists.
inline std::optional<Rat> rat_sqrt(const Rat& a) {
    if (a < Rat(0)) return std::nullopt;
    mpz_class n = a.numerator(), d = a.denominator();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(mpq_class(rn, rd));
}

}  // namespace curvelab
