#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pslet/errors.hpp"

namespace pslet {

// Truncated Taylor series of a smooth real function about a fixed center:
// coeffs()[n] = f^(n)(center)/n!.  Every operation keeps the common center and
// truncation order and never reads past it.  Division and the composed
// functions (recip, sqrt, log) use the usual order-by-order recurrences.
class TaylorSeries {
  public:
    TaylorSeries(double center, std::vector<double> coeffs) : center_(center), c_(std::move(coeffs)) {
        require(!c_.empty(), ErrorClass::contract_violation, "taylor series needs at least the constant term");
    }

    static TaylorSeries constant(double v, double center, int order) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        c[0] = v;
        return TaylorSeries(center, std::move(c));
    }

    // The identity function q |-> q expanded about `center`.
    static TaylorSeries variable(double center, int order) {
        std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
        c[0] = center;
        if (order >= 1) c[1] = 1.0;
        return TaylorSeries(center, std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double center() const { return center_; }
    const std::vector<double>& coeffs() const { return c_; }
    double operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }

    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) {
        a.check_compatible(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }

    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) {
        a.check_compatible(b);
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }

    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
        a.check_compatible(b);
        std::vector<double> r(a.c_.size(), 0.0);
        for (std::size_t n = 0; n < r.size(); ++n)
            for (std::size_t j = 0; j <= n; ++j) r[n] += a.c_[j] * b.c_[n - j];
        return TaylorSeries(a.center_, std::move(r));
    }

    friend TaylorSeries operator*(TaylorSeries a, double s) {
        for (double& v : a.c_) v *= s;
        return a;
    }

    friend TaylorSeries operator*(double s, TaylorSeries a) { return std::move(a) * s; }

    friend TaylorSeries operator+(TaylorSeries a, double s) {
        a.c_[0] += s;
        return a;
    }

    friend TaylorSeries operator+(double s, TaylorSeries a) { return std::move(a) + s; }

    friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
        a.check_compatible(b);
        require(b.c_[0] != 0.0, ErrorClass::singular_point, "series division by zero constant term");
        std::vector<double> q(a.c_.size(), 0.0);
        for (std::size_t n = 0; n < q.size(); ++n) {
            double s = a.c_[n];
            for (std::size_t j = 1; j <= n; ++j) s -= b.c_[j] * q[n - j];
            q[n] = s / b.c_[0];
        }
        return TaylorSeries(a.center_, std::move(q));
    }

    TaylorSeries recip() const {
        require(c_[0] != 0.0, ErrorClass::singular_point, "series reciprocal of zero constant term");
        std::vector<double> r(c_.size(), 0.0);
        r[0] = 1.0 / c_[0];
        for (std::size_t n = 1; n < r.size(); ++n) {
            double s = 0.0;
            for (std::size_t j = 1; j <= n; ++j) s += c_[j] * r[n - j];
            r[n] = -s / c_[0];
        }
        return TaylorSeries(center_, std::move(r));
    }

    TaylorSeries sqrt() const {
        require(c_[0] > 0.0, ErrorClass::singular_point, "series sqrt needs a positive constant term");
        std::vector<double> s(c_.size(), 0.0);
        s[0] = std::sqrt(c_[0]);
        for (std::size_t n = 1; n < s.size(); ++n) {
            double acc = c_[n];
            for (std::size_t j = 1; j < n; ++j) acc -= s[j] * s[n - j];
            s[n] = acc / (2.0 * s[0]);
        }
        return TaylorSeries(center_, std::move(s));
    }

    TaylorSeries log() const {
        require(c_[0] > 0.0, ErrorClass::singular_point, "series log needs a positive constant term");
        std::vector<double> g(c_.size(), 0.0);
        g[0] = std::log(c_[0]);
        for (std::size_t n = 1; n < g.size(); ++n) {
            double s = static_cast<double>(n) * c_[n];
            for (std::size_t j = 1; j < n; ++j) s -= static_cast<double>(j) * g[j] * c_[n - j];
            g[n] = s / (static_cast<double>(n) * c_[0]);
        }
        return TaylorSeries(center_, std::move(g));
    }

  private:
    void check_compatible(const TaylorSeries& o) const {
        require(center_ == o.center_ && c_.size() == o.c_.size(), ErrorClass::contract_violation,
                "taylor series center/order mismatch");
    }

    double center_;
    std::vector<double> c_;
};

}  // namespace pslet
