#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "curvelab/field.hpp"
#include "curvelab/errors.hpp"

namespace curvelab {

// Univariate polynomial, coefficients ascending, no trailing zeros.
template <class K>
class UniPoly {
public:
    explicit UniPoly(const K& like) : one_(field_one(like)) {}

    static UniPoly zero(const K& like) { return UniPoly(like); }
    static UniPoly constant(const K& v) {
        UniPoly f(v);
        if (!v.is_zero()) f.c_.push_back(v);
        return f;
    }
    static UniPoly x(const K& like) {
        UniPoly f(like);
        f.c_ = {field_zero(like), field_one(like)};
        return f;
    }
    static UniPoly from_coeffs(std::vector<K> c, const K& like) {
        UniPoly f(like);
        f.c_ = std::move(c);
        f.trim();
        return f;
    }
    // a + b*x
    static UniPoly linear(const K& a, const K& b) {
        return from_coeffs({a, b}, a);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& exemplar() const { return one_; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : field_zero(one_); }
    const std::vector<K>& coeffs() const { return c_; }
    K leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r(one_);
        size_t n = std::max(c_.size(), o.c_.size());
        r.c_.reserve(n);
        for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
        r.trim();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const {
        UniPoly r(one_);
        size_t n = std::max(c_.size(), o.c_.size());
        r.c_.reserve(n);
        for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
        r.trim();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r(one_);
        r.c_.reserve(c_.size());
        for (const K& v : c_) r.c_.push_back(-v);
        return r;
    }
    UniPoly operator*(const UniPoly& o) const {
        UniPoly r(one_);
        if (is_zero() || o.is_zero()) return r;
        K zero = field_zero(one_);
        r.c_.assign(c_.size() + o.c_.size() - 1, zero);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly scale(const K& s) const {
        UniPoly r(one_);
        if (s.is_zero()) return r;
        r.c_.reserve(c_.size());
        for (const K& v : c_) r.c_.push_back(v * s);
        r.trim();
        return r;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        K r = field_zero(one_);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UniPoly derivative() const {
        UniPoly r(one_);
        for (size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * field_from_int(one_, static_cast<int64_t>(i)));
        r.trim();
        return r;
    }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const {
        if (g.is_zero()) throw DivideByZeroError("UniPoly: division by zero polynomial");
        UniPoly q(one_), r = *this;
        if (r.degree() < g.degree()) return {q, r};
        K zero = field_zero(one_);
        q.c_.assign(static_cast<size_t>(r.degree() - g.degree()) + 1, zero);
        K inv_lc = g.leading().inverse();
        while (!r.is_zero() && r.degree() >= g.degree()) {
            size_t d = static_cast<size_t>(r.degree() - g.degree());
            K f = r.leading() * inv_lc;
            q.c_[d] = f;
            for (size_t i = 0; i < g.c_.size(); ++i)
                r.c_[d + i] = r.c_[d + i] - f * g.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    UniPoly operator%(const UniPoly& g) const { return divmod(g).second; }
    UniPoly operator/(const UniPoly& g) const { return divmod(g).first; }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scale(leading().inverse());
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Resultant via the Euclidean remainder sequence.
    static K resultant(const UniPoly& f, const UniPoly& g) {
        K zero = field_zero(f.one_);
        if (f.is_zero() || g.is_zero()) return zero;
        UniPoly a = f, b = g;
        K res = field_one(f.one_);
        while (true) {
            int da = a.degree(), db = b.degree();
            if (db == 0) return res * b.leading().pow(static_cast<uint64_t>(da));
            UniPoly r = a % b;
            if (r.is_zero()) return zero;
            int dr = r.degree();
            if ((da * db) % 2 == 1) res = -res;
            res = res * b.leading().pow(static_cast<uint64_t>(da - dr));
            a = std::move(b);
            b = std::move(r);
        }
    }

    // this^e modulo m
    static UniPoly pow_mod(UniPoly base, uint64_t e, const UniPoly& m) {
        UniPoly r = constant(field_one(base.one_));
        base = base % m;
        while (e) {
            if (e & 1) r = (r * base) % m;
            base = (base * base) % m;
            e >>= 1;
        }
        return r;
    }

    // Newton interpolation through distinct nodes.
    static UniPoly interpolate(const std::vector<K>& xs, const std::vector<K>& ys, const K& like) {
        size_t n = xs.size();
        std::vector<K> dd = ys;
        for (size_t k = 1; k < n; ++k)
            for (size_t i = n - 1; i >= k; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
        UniPoly p(like);
        for (size_t i = n; i-- > 0;) {
            UniPoly lin = from_coeffs({-xs[i], field_one(like)}, like);
            p = p * lin + constant(dd[i]);
        }
        return p;
    }

    // Multiplicity of `pt` as a root.
    int vanishing_order_at(const K& pt) const {
        if (is_zero()) return -1;  // callers treat the zero polynomial separately
        UniPoly lin = from_coeffs({-pt, field_one(one_)}, one_);
        UniPoly f = *this;
        int k = 0;
        while (true) {
            auto [q, r] = f.divmod(lin);
            if (!r.is_zero()) return k;
            ++k;
            f = std::move(q);
            if (f.is_zero()) return k;
        }
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    K one_;
    std::vector<K> c_;
};

namespace detail {

inline std::vector<Fp> roots_by_scan(const UniPoly<Fp>& f) {
    uint64_t p = f.exemplar().modulus();
    std::vector<Fp> out;
    for (uint64_t v = 0; v < p; ++v) {
        Fp x(v, p);
        if (f.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

// Equal-degree splitting of a product of distinct linear factors (p odd).
inline void split_linear_factors(const UniPoly<Fp>& g, std::mt19937_64& rng,
                                 std::vector<Fp>& out) {
    if (g.degree() <= 0) return;
    uint64_t p = g.exemplar().modulus();
    if (g.degree() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    Fp one(1, p);
    for (int attempt = 0; attempt < 128; ++attempt) {
        Fp a(rng() % p, p);
        UniPoly<Fp> probe = UniPoly<Fp>::from_coeffs({a, one}, one);  // x + a
        UniPoly<Fp> h = UniPoly<Fp>::pow_mod(probe, (p - 1) / 2, g) - UniPoly<Fp>::constant(one);
        UniPoly<Fp> d = UniPoly<Fp>::gcd(h, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear_factors(d, rng, out);
            split_linear_factors((g / d).monic(), rng, out);
            return;
        }
    }
    // pathological randomness (only plausible for tiny p): definitive scan
    for (const Fp& r : roots_by_scan(g)) out.push_back(r);
}

}  // namespace detail

// All roots of f in F_p, each once, sorted. gcd with x^p - x isolates the
// product of distinct linear factors, then Cantor-Zassenhaus splitting
// extracts them; exhaustive scan is the fallback for tiny fields (and p = 2).
inline std::vector<Fp> uni_roots(const UniPoly<Fp>& f, uint64_t seed = 1) {
    if (f.is_zero()) throw std::invalid_argument("uni_roots: zero polynomial");
    uint64_t p = f.exemplar().modulus();
    std::vector<Fp> out;
    if (f.degree() == 0) return out;
    if (p == 2) {
        out = detail::roots_by_scan(f);
    } else {
        Fp one(1, p), zero(0, p);
        UniPoly<Fp> xp = UniPoly<Fp>::pow_mod(UniPoly<Fp>::x(one), p, f.monic());
        UniPoly<Fp> g = UniPoly<Fp>::gcd(xp - UniPoly<Fp>::x(one), f.monic());
        std::mt19937_64 rng(seed);
        detail::split_linear_factors(g, rng, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace curvelab
