#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pslet/errors.hpp"

namespace pslet {

// Dense univariate polynomial with real coefficients, coeffs()[i] = coefficient
// of x^i.  The zero polynomial is canonically the empty coefficient list, so
// degree() is -1 for zero.  Arithmetic trims trailing coefficients that are
// numerically zero relative to the operands (threshold 1e-14 * max |coeff|).
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<double> c) : c_(c) { trim(max_abs()); }
    explicit Poly(std::vector<double> c) : c_(std::move(c)) { trim(max_abs()); }

    static Poly constant(double v) { return Poly{v}; }

    static Poly monomial(int power, double coeff = 1.0) {
        if (coeff == 0.0) return Poly{};
        std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
        c.back() = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }

    // Coefficient of x^i; out-of-range powers read as zero.
    double operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0.0;
    }

    double eval(double x) const {
        double r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<double> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
        return Poly(std::move(d));
    }

    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        if (c_.empty()) return Poly{};
        std::vector<double> a(c_.size() + 1, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<double>(i + 1);
        return Poly(std::move(a));
    }

    Poly& operator+=(const Poly& o) {
        double scale = std::max(max_abs(), o.max_abs());
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim(scale);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        double scale = std::max(max_abs(), o.max_abs());
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim(scale);
        return *this;
    }

    Poly& operator*=(double s) {
        if (s == 0.0) {
            c_.clear();
            return *this;
        }
        for (double& v : c_) v *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, double s) { return a *= s; }
    friend Poly operator*(double s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= -1.0; }

    // Exact coefficient convolution: degree = deg(a) + deg(b) unless either is zero.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        Poly p;
        p.c_ = std::move(r);
        p.trim(std::max(a.max_abs(), b.max_abs()));
        return p;
    }

  private:
    void trim(double scale) {
        double tol = 1e-14 * scale;
        while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
    }

    std::vector<double> c_;
};

}  // namespace pslet
