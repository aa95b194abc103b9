#pragma once

#include "unipoly.hpp"

#include <cmath>

namespace fieldasym {

/// Closed under differentiation, scaling and shifts by powers of t:
///     N(t) / ( t^v (1+t^2)^(m/2) )   with m odd and positive.
/// Normalization cancels common powers of t between N and the t^v prefix, so
/// v > 0 implies N(0) != 0, and the zero function is stored as N = 0, v = 0.
struct HalfPowerForm {
    UniPoly numerator;
    int half_exponent = 1;   ///< m, in units of (1+t^2)^(1/2); always odd
    unsigned t_valuation = 0;  ///< v

    static HalfPowerForm zero() { return {UniPoly(), 1, 0}; }

    bool is_zero() const { return numerator.is_zero(); }

    HalfPowerForm& normalize() {
        if (numerator.is_zero()) {
            t_valuation = 0;
            return *this;
        }
        unsigned cancel = std::min(t_valuation, numerator.valuation());
        if (cancel > 0) {
            numerator = numerator.shifted_down(cancel);
            t_valuation -= cancel;
        }
        return *this;
    }

    /// d/dt of N t^-v (1+t^2)^(-m/2), collected over the common denominator
    /// t^(v+1) (1+t^2)^((m+2)/2).
    HalfPowerForm derivative() const {
        UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
        UniPoly t{Rational(0), Rational(1)};
        UniPoly n = (t * numerator.derivative() - numerator * Rational(t_valuation)) * one_plus_t2 -
                    (t * t) * numerator * Rational(half_exponent);
        HalfPowerForm d{n, half_exponent + 2, t_valuation + 1};
        return d.normalize();
    }

    /// Multiplies by t^k (k may be negative).
    HalfPowerForm times_t_power(int k) const {
        HalfPowerForm r = *this;
        if (r.is_zero()) return r;
        if (k >= 0) {
            unsigned up = static_cast<unsigned>(k);
            unsigned cancel = std::min(up, r.t_valuation);
            r.t_valuation -= cancel;
            r.numerator = r.numerator.shifted_up(up - cancel);
        } else {
            r.t_valuation += static_cast<unsigned>(-k);
        }
        return r.normalize();
    }

    HalfPowerForm scaled(const Rational& s) const {
        HalfPowerForm r{numerator * s, half_exponent, t_valuation};
        return r.normalize();
    }

    friend HalfPowerForm operator+(const HalfPowerForm& a, const HalfPowerForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int m = std::max(a.half_exponent, b.half_exponent);
        unsigned v = std::max(a.t_valuation, b.t_valuation);
        auto lift = [&](const HalfPowerForm& f) {
            UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
            UniPoly n = f.numerator.shifted_up(v - f.t_valuation);
            for (int e = f.half_exponent; e < m; e += 2) n = n * one_plus_t2;
            return n;
        };
        HalfPowerForm r{lift(a) + lift(b), m, v};
        return r.normalize();
    }

    /// Exact equality as functions (cross-multiplied comparison).
    bool same_function_as(const HalfPowerForm& other) const {
        if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
        UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
        UniPoly lhs = numerator;
        UniPoly rhs = other.numerator;
        for (int e = half_exponent; e < other.half_exponent; e += 2) lhs = lhs * one_plus_t2;
        for (int e = other.half_exponent; e < half_exponent; e += 2) rhs = rhs * one_plus_t2;
        lhs = lhs.shifted_up(std::max(t_valuation, other.t_valuation) - t_valuation);
        rhs = rhs.shifted_up(std::max(t_valuation, other.t_valuation) - other.t_valuation);
        return lhs == rhs;
    }

    /// The value at t = 0 is a well-defined number (no pole) exactly when the
    /// t^v prefix has been fully cancelled.
    bool finite_at_zero() const { return is_zero() || t_valuation == 0; }

    double eval_double(double t) const {
        if (is_zero()) return 0.0;
        double denom = std::pow(1.0 + t * t, 0.5 * half_exponent);
        double value = numerator.eval_double(t) / denom;
        if (t_valuation > 0) value /= std::pow(t, static_cast<int>(t_valuation));
        return value;
    }
};

}  // namespace fieldasym
