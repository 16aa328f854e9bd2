#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace pslet::detail {

struct GaussRule {
    std::vector<double> node;    // on (-1, 1)
    std::vector<double> weight;
};

// Gauss-Legendre nodes by Newton iteration on P_n, seeded with the Chebyshev
// approximation to the roots.
inline const GaussRule& gauss_legendre(int n) {
    static thread_local std::vector<GaussRule> cache(129);
    GaussRule& rule = cache[static_cast<std::size_t>(n)];
    if (!rule.node.empty()) return rule;

    rule.node.resize(static_cast<std::size_t>(n));
    rule.weight.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.node[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weight[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

// Integral of f over [a, b] with an npoint Gauss-Legendre rule.
template <typename F>
double gauss_integrate(F&& f, double a, double b, int npoint = 64) {
    const GaussRule& rule = gauss_legendre(npoint);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i) s += rule.weight[i] * f(mid + half * rule.node[i]);
    return s * half;
}

}  // namespace pslet::detail
