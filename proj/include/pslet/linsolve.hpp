#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "pslet/errors.hpp"

namespace pslet::detail {

// Row-major dense matrix, sized for the small systems this library solves
// (Pade tables up to ~6x6, recursion orders up to ~100 unknowns).
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct SolveResult {
    std::vector<double> x;
    double condition = 0.0;  // infinity-norm condition estimate
    bool singular = false;
};

// Gaussian elimination with partial pivoting; the condition number comes from
// the explicit inverse, which is affordable at these sizes.
inline SolveResult solve_dense(Matrix A, std::vector<double> b) {
    const int n = A.rows;
    SolveResult res;
    if (n == 0) return res;

    double norm_a = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(A(i, j));
        norm_a = std::max(norm_a, s);
    }

    // Augment with the identity so back-substitution yields A^{-1} alongside x.
    Matrix aug(n, n + 1 + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[static_cast<std::size_t>(i)];
        aug(i, n + 1 + i) = 1.0;
    }

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(aug(r, col)) > std::abs(aug(piv, col))) piv = r;
        if (std::abs(aug(piv, col)) <= 1e-300 + 1e-15 * norm_a) {
            res.singular = true;
            res.condition = std::numeric_limits<double>::infinity();
            return res;
        }
        if (piv != col)
            for (int j = 0; j < aug.cols; ++j) std::swap(aug(piv, j), aug(col, j));
        double d = aug(col, col);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = aug(r, col) / d;
            if (f == 0.0) continue;
            for (int j = col; j < aug.cols; ++j) aug(r, j) -= f * aug(col, j);
        }
    }

    res.x.resize(static_cast<std::size_t>(n));
    double norm_inv = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = aug(i, i);
        res.x[static_cast<std::size_t>(i)] = aug(i, n) / d;
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(aug(i, n + 1 + j) / d);
        norm_inv = std::max(norm_inv, s);
    }
    res.condition = norm_a * norm_inv;
    return res;
}

}  // namespace pslet::detail
