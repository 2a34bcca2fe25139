#pragma once

// Small dense linear algebra over GF(2^k): rank, kernel, determinant.
// Matrices are row vectors of Fq; everything is exact, no pivot scaling issues
// beyond choosing any nonzero pivot.

#include <vector>

#include "k3k/gf2k.hpp"

namespace k3k {

using FqVec = std::vector<Fq>;
using FqMat = std::vector<FqVec>;

// Reduced row echelon form in place; returns pivot column per row used.
inline std::vector<int> rref(FqMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Fq inv = m[r][c].inv();
        for (size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i != r && !m[i][c].is_zero()) {
                Fq f = m[i][c];
                for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] + f * m[r][j];
            }
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

inline size_t rank(FqMat m) { return rref(m).size(); }

// Basis of the right kernel {v : M v = 0}.
inline std::vector<FqVec> kernel(FqMat m, FieldSpec spec) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FqVec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        FqVec v(cols, Fq::zero(spec));
        v[fc] = Fq::one(spec);
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r has pivot at pivots[r]; entry at fc gives the dependence
            v[pivots[r]] = m[r][fc];  // char 2: no sign
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Fq det(FqMat m, FieldSpec spec) {
    size_t n = m.size();
    Fq d = Fq::one(spec);
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && m[pr][c].is_zero()) ++pr;
        if (pr == n) return Fq::zero(spec);
        std::swap(m[c], m[pr]);  // swap sign is irrelevant in char 2
        d = d * m[c][c];
        Fq inv = m[c][c].inv();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Fq f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] + f * m[c][j];
        }
    }
    return d;
}

}  // namespace k3k
