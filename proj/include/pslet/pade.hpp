#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pslet/errors.hpp"
#include "pslet/linsolve.hpp"
#include "pslet/poly.hpp"
#include "pslet/taylor.hpp"

namespace pslet {

// [N, M] Pade approximant: numerator degree <= M over denominator degree <= N
// with unit constant denominator coefficient.  Fitting c_0..c_{N+M} solves the
// standard Toeplitz system for the denominator first, then reads off the
// numerator by convolution.
struct PadeApproximant {
    Poly num;
    Poly den;
    int N = 0, M = 0;
    double condition = 1.0;

    double eval(double z) const {
        double d = den.eval(z);
        require(std::abs(d) > 1e-12, ErrorClass::pole,
                "pade approximant has a pole within 1e-12 of z=" + std::to_string(z));
        return num.eval(z) / d;
    }

    // Maclaurin re-expansion of num/den, for the reproduction invariant.
    std::vector<double> maclaurin(int order) const {
        std::vector<double> nc(static_cast<std::size_t>(order) + 1, 0.0);
        std::vector<double> dc(static_cast<std::size_t>(order) + 1, 0.0);
        for (int i = 0; i <= order; ++i) {
            nc[static_cast<std::size_t>(i)] = num[i];
            dc[static_cast<std::size_t>(i)] = den[i];
        }
        TaylorSeries ratio = TaylorSeries(0.0, nc) / TaylorSeries(0.0, dc);
        return ratio.coeffs();
    }
};

inline PadeApproximant fit_pade(std::span<const double> c, int N, int M) {
    require(N >= 0 && M >= 0, ErrorClass::contract_violation, "pade orders must be nonnegative");
    require(static_cast<int>(c.size()) >= N + M + 1, ErrorClass::arity,
            "pade [" + std::to_string(N) + "," + std::to_string(M) + "] needs " +
                std::to_string(N + M + 1) + " coefficients, got " + std::to_string(c.size()));

    auto coef = [&](int i) { return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0.0; };

    PadeApproximant p;
    p.N = N;
    p.M = M;

    std::vector<double> q(static_cast<std::size_t>(N) + 1, 0.0);
    q[0] = 1.0;
    if (N > 0) {
        bool all_zero = true;
        for (int i = 0; i <= N + M; ++i)
            if (coef(i) != 0.0) all_zero = false;
        if (all_zero) {
            // Zero input: zero numerator over unit denominator.
            p.num = Poly{};
            p.den = Poly{1.0};
            return p;
        }
        detail::Matrix A(N, N);
        std::vector<double> rhs(static_cast<std::size_t>(N));
        for (int r = 1; r <= N; ++r) {
            for (int s = 1; s <= N; ++s) A(r - 1, s - 1) = coef(M + r - s);
            rhs[static_cast<std::size_t>(r - 1)] = -coef(M + r);
        }
        auto sol = detail::solve_dense(A, rhs);
        if (sol.singular || sol.condition > 1e14)
            fail(ErrorClass::degenerate_table,
                 "pade [" + std::to_string(N) + "," + std::to_string(M) +
                     "] table is degenerate; fall back to [" + std::to_string(N - 1) + "," +
                     std::to_string(M - 1) + "]");
        for (int s = 1; s <= N; ++s) q[static_cast<std::size_t>(s)] = sol.x[static_cast<std::size_t>(s - 1)];
        p.condition = sol.condition;
    }

    std::vector<double> num(static_cast<std::size_t>(M) + 1, 0.0);
    for (int t = 0; t <= M; ++t) {
        double s = 0.0;
        for (int j = 0; j <= std::min(t, N); ++j) s += q[static_cast<std::size_t>(j)] * coef(t - j);
        num[static_cast<std::size_t>(t)] = s;
    }
    p.num = Poly(std::move(num));
    p.den = Poly(std::move(q));
    return p;
}

struct PadeTableEntry {
    int N = 0, M = 0;       // requested orders
    int usedN = 0, usedM = 0;  // after any degenerate fallback
    double value = 0.0;
    double condition = 0.0;
    bool ok = false;
    bool fell_back = false;
};

// Fit [N, M] at z with automatic [N-1, M-1] fallback on degenerate tables.
inline PadeTableEntry pade_value(std::span<const double> c, int N, int M, double z) {
    PadeTableEntry e;
    e.N = N;
    e.M = M;
    int n = N, m = M;
    while (n >= 0 && m >= 0) {
        try {
            PadeApproximant p = fit_pade(c, n, m);
            e.value = p.eval(z);
            e.condition = p.condition;
            e.usedN = n;
            e.usedM = m;
            e.ok = true;
            e.fell_back = (n != N || m != M);
            return e;
        } catch (const Error& err) {
            if (err.cls() != ErrorClass::degenerate_table && err.cls() != ErrorClass::pole) throw;
            --n;
            --m;
        }
    }
    return e;  // marked not ok; callers treat as missing
}

struct PadeDiagnostics {
    std::vector<PadeTableEntry> entries;      // all feasible [N,N] and [N,N+1]
    std::vector<double> partial_sums;         // offset + running sum of the series at z
    std::vector<double> partial_diffs;        // |P_m - P_{m-1}| relative
    std::vector<double> sequence;             // offset [1,1],[2,2],[2,3],[3,3],... values in order
    std::vector<double> sequence_diffs;       // successive relative differences
    bool stable = false;
    int stabilization_order = 0;              // first m with all later partial diffs small; 0 = none
};

inline double rel_diff(double a, double b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// Survey of the resummation landscape for one coefficient list: every feasible
// near-diagonal approximant, the raw partial sums, and a stability verdict.
// `offset` is added to every reported value (the leading term of the energy
// series, which is not part of the Pade fit).
inline PadeDiagnostics pade_table(std::span<const double> c, double z, double offset = 0.0) {
    PadeDiagnostics d;
    const int n = static_cast<int>(c.size());

    double run = offset;
    d.partial_sums.push_back(run);
    double zp = 1.0;
    for (int i = 0; i < n; ++i) {
        run += c[static_cast<std::size_t>(i)] * zp;
        zp *= z;
        d.partial_sums.push_back(run);
        d.partial_diffs.push_back(rel_diff(d.partial_sums[d.partial_sums.size() - 2], run));
    }

    for (int N = 1; 2 * N + 1 <= n; ++N) {
        PadeTableEntry diag = pade_value(c, N, N, z);
        diag.value += offset;
        d.entries.push_back(diag);
        if (diag.ok) d.sequence.push_back(diag.value);
        if (2 * N + 2 <= n) {
            PadeTableEntry off_diag = pade_value(c, N, N + 1, z);
            off_diag.value += offset;
            d.entries.push_back(off_diag);
            if (off_diag.ok) d.sequence.push_back(off_diag.value);
        }
    }

    for (std::size_t i = 1; i < d.sequence.size(); ++i)
        d.sequence_diffs.push_back(rel_diff(d.sequence[i - 1], d.sequence[i]));

    double worst = 0.0;
    for (double v : d.sequence_diffs) worst = std::max(worst, v);
    d.stable = !d.sequence.empty() && worst < 1e-8;

    // First partial sum from which the series no longer moves (relative 1e-7).
    int settled_from = static_cast<int>(d.partial_diffs.size());
    while (settled_from > 0 && d.partial_diffs[static_cast<std::size_t>(settled_from) - 1] <= 1e-7)
        --settled_from;
    d.stabilization_order = (settled_from < static_cast<int>(d.partial_diffs.size())) ? settled_from + 1 : 0;
    return d;
}

}  // namespace pslet
