#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "pslet/errors.hpp"
#include "pslet/taylor.hpp"

namespace pslet {

// Built-in radial potentials (hbar = m = 1 units):
//   harmonic        V = A^2 q^2 / 2
//   coulomb         V = -strength / q
//   npo             V = a0 q^2 + a q^2 / (1 + b q^2)
//   cutoff_coulomb  V = -1 / (q + c)
//   coulomb_log     V = -coul / q + mu ln(q^2 + q)
enum class PotentialKind { harmonic, coulomb, npo, cutoff_coulomb, coulomb_log };

inline const char* to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::harmonic: return "harmonic";
        case PotentialKind::coulomb: return "coulomb";
        case PotentialKind::npo: return "npo";
        case PotentialKind::cutoff_coulomb: return "cutoff_coulomb";
        case PotentialKind::coulomb_log: return "coulomb_log";
    }
    return "unknown";
}

struct PotentialSpec {
    PotentialKind kind = PotentialKind::harmonic;
    double A = 1.0;                 // harmonic
    double strength = 1.0;          // coulomb
    double a0 = 0.0, a = 0.0, b = 1.0;  // npo
    double c = 1.0;                 // cutoff_coulomb
    double coul = 1.0, mu = 0.0;    // coulomb_log

    static PotentialSpec harmonic(double A) {
        PotentialSpec s;
        s.kind = PotentialKind::harmonic;
        s.A = A;
        return s;
    }
    static PotentialSpec coulomb(double strength) {
        PotentialSpec s;
        s.kind = PotentialKind::coulomb;
        s.strength = strength;
        return s;
    }
    static PotentialSpec npo(double a0, double a, double b) {
        PotentialSpec s;
        s.kind = PotentialKind::npo;
        s.a0 = a0;
        s.a = a;
        s.b = b;
        return s;
    }
    static PotentialSpec cutoff_coulomb(double c) {
        PotentialSpec s;
        s.kind = PotentialKind::cutoff_coulomb;
        s.c = c;
        return s;
    }
    static PotentialSpec coulomb_log(double coul, double mu) {
        PotentialSpec s;
        s.kind = PotentialKind::coulomb_log;
        s.coul = coul;
        s.mu = mu;
        return s;
    }
};

// Immutable evaluation machinery for one PotentialSpec.  Values come from the
// closed form; Taylor coefficients come from composing series primitives on
// the same closed form, never from numerical differentiation.  `scale` is an
// overall multiplier used by the Hamiltonian canonicalization.
class PotentialModel {
  public:
    explicit PotentialModel(PotentialSpec spec, double scale = 1.0) : spec_(spec), scale_(scale) {
        validate();
    }

    const PotentialSpec& spec() const { return spec_; }
    double scale() const { return scale_; }

    PotentialModel rescaled(double factor) const { return PotentialModel(spec_, scale_ * factor); }

    // Smallest admissible coordinate (open bound).
    double domain_min() const {
        switch (spec_.kind) {
            case PotentialKind::coulomb:
            case PotentialKind::coulomb_log: return 0.0;
            case PotentialKind::cutoff_coulomb: return -spec_.c;
            default: return -std::numeric_limits<double>::infinity();
        }
    }

    double eval(double q) const {
        check_domain(q);
        switch (spec_.kind) {
            case PotentialKind::harmonic: return scale_ * 0.5 * spec_.A * spec_.A * q * q;
            case PotentialKind::coulomb: return scale_ * (-spec_.strength / q);
            case PotentialKind::npo:
                return scale_ * (spec_.a0 * q * q + spec_.a * q * q / (1.0 + spec_.b * q * q));
            case PotentialKind::cutoff_coulomb: return scale_ * (-1.0 / (q + spec_.c));
            case PotentialKind::coulomb_log:
                return scale_ * (-spec_.coul / q + spec_.mu * std::log(q * q + q));
        }
        return 0.0;
    }

    TaylorSeries taylor_at(double q0, int order) const {
        check_domain(q0);
        require(order >= 0, ErrorClass::contract_violation, "taylor order must be >= 0");
        const TaylorSeries q = TaylorSeries::variable(q0, order);
        switch (spec_.kind) {
            case PotentialKind::harmonic: return (q * q) * (scale_ * 0.5 * spec_.A * spec_.A);
            case PotentialKind::coulomb: return q.recip() * (-scale_ * spec_.strength);
            case PotentialKind::npo: {
                TaylorSeries q2 = q * q;
                TaylorSeries rat = q2 / (q2 * spec_.b + 1.0);
                return q2 * (scale_ * spec_.a0) + rat * (scale_ * spec_.a);
            }
            case PotentialKind::cutoff_coulomb: return (q + spec_.c).recip() * (-scale_);
            case PotentialKind::coulomb_log:
                return q.recip() * (-scale_ * spec_.coul) + (q * q + q).log() * (scale_ * spec_.mu);
        }
        fail(ErrorClass::configuration, "unhandled potential kind");
    }

    double deriv1(double q) const { return taylor_at(q, 1)[1]; }
    double deriv2(double q) const { return 2.0 * taylor_at(q, 2)[2]; }

    // NPO low-order shifted expansions lose accuracy for sqrt(a)/b in [0.1, 30].
    bool critical_regime() const {
        if (spec_.kind != PotentialKind::npo || spec_.a <= 0.0) return false;
        double r = std::sqrt(spec_.a) / spec_.b;
        return r >= 0.1 && r <= 30.0;
    }

  private:
    void validate() const {
        auto check = [](bool ok, const std::string& what) {
            require(ok, ErrorClass::configuration, "invalid potential parameter: " + what);
        };
        check(std::isfinite(scale_) && scale_ != 0.0, "scale");
        switch (spec_.kind) {
            case PotentialKind::harmonic: check(spec_.A > 0.0, "A must be > 0"); break;
            case PotentialKind::coulomb: check(spec_.strength > 0.0, "strength must be > 0"); break;
            case PotentialKind::npo:
                check(spec_.b > 0.0, "b must be > 0");
                check(spec_.a0 >= 0.0, "a0 must be >= 0");
                check(spec_.a >= 0.0, "a must be >= 0");
                break;
            case PotentialKind::cutoff_coulomb: check(spec_.c > 0.0, "c must be > 0"); break;
            case PotentialKind::coulomb_log:
                check(spec_.coul > 0.0, "coul_strength must be > 0");
                check(spec_.mu >= 0.0, "mu must be >= 0");
                break;
        }
    }

    void check_domain(double q) const {
        require(q > domain_min(), ErrorClass::domain,
                std::string(to_string(spec_.kind)) + " potential undefined at q=" + std::to_string(q));
    }

    PotentialSpec spec_;
    double scale_;
};

inline PotentialModel make_potential(const PotentialSpec& spec) { return PotentialModel(spec); }

}  // namespace pslet
