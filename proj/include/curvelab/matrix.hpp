#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "curvelab/field.hpp"

namespace curvelab {

// Dense exact matrix. Elimination is deterministic: pivots are the first
// nonzero entry in column order, so echelon forms are reproducible.
template <class K>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const K& like)
        : rows_(rows), cols_(cols), one_(field_one(like)), a_(rows * cols, field_zero(like)) {}

    static Matrix from_rows(const std::vector<std::vector<K>>& rows, const K& like) {
        size_t nc = rows.empty() ? 0 : rows[0].size();
        Matrix m(rows.size(), nc, like);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const K& exemplar() const { return one_; }

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref() {
        if constexpr (std::is_same_v<K, Rat>) {
            std::vector<size_t> piv = bareiss_echelon();
            normalize_from_echelon(piv);
            return piv;
        } else {
            return gauss_jordan();
        }
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Basis of {v : Mv = 0}; each vector normalized so its first nonzero
    // entry is 1. Order follows the free columns left to right.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        std::vector<size_t> piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (size_t c : piv) is_piv[c] = true;
        std::vector<std::vector<K>> basis;
        K zero = field_zero(one_);
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_piv[fc]) continue;
            std::vector<K> v(cols_, zero);
            v[fc] = one_;
            for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(i, fc);
            size_t lead = 0;
            while (lead < cols_ && v[lead].is_zero()) ++lead;
            K inv = v[lead].inverse();
            for (auto& x : v) x = x * inv;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    K det() const {
        Matrix m = *this;
        K d = one_;
        size_t n = rows_;
        for (size_t c = 0; c < n; ++c) {
            size_t pr = c;
            while (pr < n && m.at(pr, c).is_zero()) ++pr;
            if (pr == n) return field_zero(one_);
            if (pr != c) {
                for (size_t j = c; j < n; ++j) std::swap(m.at(c, j), m.at(pr, j));
                d = -d;
            }
            d = d * m.at(c, c);
            K inv = m.at(c, c).inverse();
            for (size_t i = c + 1; i < n; ++i) {
                if (m.at(i, c).is_zero()) continue;
                K f = m.at(i, c) * inv;
                for (size_t j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
            }
        }
        return d;
    }

private:
    std::vector<size_t> gauss_jordan() {
        std::vector<size_t> piv;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t pr = r;
            while (pr < rows_ && at(pr, c).is_zero()) ++pr;
            if (pr == rows_) continue;
            if (pr != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
            K inv = at(r, c).inverse();
            for (size_t j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (size_t j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            piv.push_back(c);
            ++r;
        }
        return piv;
    }

    // Fraction-free (Bareiss) forward elimination: keeps intermediate entries
    // as quotients of minors, bounding coefficient growth over Q.
    std::vector<size_t> bareiss_echelon() {
        std::vector<size_t> piv;
        K prev = one_;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t pr = r;
            while (pr < rows_ && at(pr, c).is_zero()) ++pr;
            if (pr == rows_) continue;
            if (pr != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
            for (size_t i = r + 1; i < rows_; ++i) {
                for (size_t j = c + 1; j < cols_; ++j)
                    at(i, j) = (at(i, j) * at(r, c) - at(i, c) * at(r, j)) / prev;
                at(i, c) = field_zero(one_);
            }
            prev = at(r, c);
            piv.push_back(c);
            ++r;
        }
        return piv;
    }

    void normalize_from_echelon(const std::vector<size_t>& piv) {
        for (size_t r = piv.size(); r-- > 0;) {
            size_t c = piv[r];
            K inv = at(r, c).inverse();
            for (size_t j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (size_t i = 0; i < r; ++i) {
                if (at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (size_t j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
        }
    }

    size_t rows_, cols_;
    K one_;
    std::vector<K> a_;
};

}  // namespace curvelab
