#pragma once

#include "rational.hpp"

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

namespace fieldasym {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(i) multiplies x^i; the highest stored coefficient is nonzero,
/// so the zero polynomial stores nothing and reports degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) { trim(); }

    static UniPoly from_coefficients(std::vector<Rational> low_to_high) {
        UniPoly p;
        p.c_ = std::move(low_to_high);
        p.trim();
        return p;
    }

    static UniPoly constant(Rational value) {
        UniPoly p;
        if (value != 0) p.c_.push_back(std::move(value));
        return p;
    }

    static UniPoly monomial(Rational coefficient, unsigned power) {
        UniPoly p;
        if (coefficient != 0) {
            p.c_.assign(power + 1, Rational(0));
            p.c_[power] = std::move(coefficient);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(unsigned i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    const Rational& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    unsigned valuation() const {
        for (unsigned i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return 0;
    }

    bool operator==(const UniPoly& other) const { return c_ == other.c_; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    UniPoly& operator+=(const UniPoly& other) {
        if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
        for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& other) {
        if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
        for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        if (s == 0) return UniPoly();
        UniPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }

    UniPoly derivative() const {
        UniPoly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(i);
        r.trim();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    /// Multiplies by x^k.
    UniPoly shifted_up(unsigned k) const {
        if (is_zero() || k == 0) return *this;
        UniPoly r;
        r.c_.assign(c_.size() + k, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Divides by x^k; the low k coefficients must vanish.
    UniPoly shifted_down(unsigned k) const {
        if (is_zero() || k == 0) return *this;
        assert(valuation() >= k);
        UniPoly r;
        r.c_.assign(c_.begin() + k, c_.end());
        return r;
    }

    /// Long division: returns (quotient, remainder) with deg r < deg divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& divisor) {
        if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
        UniPoly q, r = a;
        const int dd = divisor.degree();
        const Rational& lead = divisor.leading();
        while (!r.is_zero() && r.degree() >= dd) {
            unsigned shift = static_cast<unsigned>(r.degree() - dd);
            Rational factor = r.leading() / lead;
            q += UniPoly::monomial(factor, shift);
            r -= divisor.shifted_up(shift) * factor;
        }
        return {q, r};
    }

    /// Exact division; throws if the divisor does not divide this polynomial.
    UniPoly divided_exactly(const UniPoly& divisor) const {
        auto [q, r] = divmod(*this, divisor);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    std::string to_string(std::string_view var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rational mag = abs_of(c_[i]);
            if (first) {
                if (c_[i] < 0) out << '-';
                first = false;
            } else {
                out << (c_[i] < 0 ? " - " : " + ");
            }
            bool unit = (mag == 1);
            if (i == 0 || !unit) out << format_rational(mag);
            if (i > 0) {
                if (!unit) out << '*';
                out << var;
                if (i > 1) out << '^' << i;
            }
        }
        return out.str();
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Rewrites p as content * primitive with integer coprime coefficients.
/// The content keeps the sign of the leading coefficient, so the primitive
/// part always has a positive leading coefficient.
inline std::pair<Rational, UniPoly> content_and_primitive(const UniPoly& p) {
    if (p.is_zero()) return {Rational(0), UniPoly()};
    Int den_lcm(1);
    for (const auto& c : p.coefficients())
        if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
    Int num_gcd(0);
    for (const auto& c : p.coefficients())
        if (c != 0) num_gcd = gcd(num_gcd, Int(numerator(c) * (den_lcm / denominator(c))));
    Rational content(num_gcd, den_lcm);
    if (p.leading() < 0) content = -content;
    std::vector<Rational> scaled;
    scaled.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) scaled.push_back(c / content);
    return {content, UniPoly::from_coefficients(std::move(scaled))};
}

inline UniPoly primitive_part(const UniPoly& p) { return content_and_primitive(p).second; }

/// Scales to integer coprime coefficients by a positive factor only, so the
/// sign pattern of the coefficients is preserved.
inline UniPoly positive_scaled_primitive(const UniPoly& p) {
    auto [content, prim] = content_and_primitive(p);
    return content < 0 ? -prim : prim;
}

/// Primitive gcd with positive leading coefficient; gcd(0, q) = primitive(q).
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.is_zero() ? UniPoly() : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.degree() < b.degree()) std::swap(a, b);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : primitive_part(r);
    }
    return a;
}

/// Yun decomposition: p = content * prod f_i^i with the f_i squarefree,
/// primitive and pairwise coprime.  Only factors of positive degree are
/// returned, as (factor, multiplicity) pairs in increasing multiplicity.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, unsigned>> factors;
    if (p.degree() < 1) return factors;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) {
        factors.emplace_back(primitive_part(p), 1u);
        return factors;
    }
    UniPoly w = p.divided_exactly(g);
    UniPoly y = p.derivative().divided_exactly(g);
    UniPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly f = poly_gcd(w, z);
        if (f.degree() > 0) factors.emplace_back(f, i);
        w = w.divided_exactly(f);
        y = z.divided_exactly(f);
        z = y - w.derivative();
        ++i;
    }
    return factors;
}

/// Product of the distinct irreducible factors, primitive with positive lead.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly result = UniPoly::constant(Rational(1));
    for (const auto& [factor, mult] : squarefree_decomposition(p)) result = result * factor;
    return primitive_part(result);
}

/// True when a = s*b for some nonzero rational s.
inline bool proportional(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    return primitive_part(a) == primitive_part(b);
}

/// Only even (resp. odd) powers of x carry nonzero coefficients.
inline bool is_even_polynomial(const UniPoly& p) {
    for (int i = 1; i <= p.degree(); i += 2)
        if (p.coeff(static_cast<unsigned>(i)) != 0) return false;
    return true;
}

inline bool is_odd_polynomial(const UniPoly& p) {
    for (int i = 0; i <= p.degree(); i += 2)
        if (p.coeff(static_cast<unsigned>(i)) != 0) return false;
    return true;
}

}  // namespace fieldasym
