#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fieldasym {

/// Sparse bivariate polynomial over the rationals, indexed by (deg_x, deg_y).
class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPoly() = default;

    static BiPoly constant(Rational c) {
        BiPoly p;
        p.add_term(0, 0, std::move(c));
        return p;
    }

    static BiPoly monomial(Rational c, unsigned deg_x, unsigned deg_y) {
        BiPoly p;
        p.add_term(deg_x, deg_y, std::move(c));
        return p;
    }

    void add_term(unsigned deg_x, unsigned deg_y, const Rational& c) {
        if (c == 0) return;
        Key key{deg_x, deg_y};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int best = -1;
        for (const auto& [key, c] : terms_)
            best = std::max(best, static_cast<int>(key.first + key.second));
        return best;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }

    bool operator==(const BiPoly& other) const { return terms_ == other.terms_; }

    BiPoly& operator+=(const BiPoly& other) {
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& other) {
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const Rational& s) {
        BiPoly r;
        if (s == 0) return r;
        for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, c * s);
        return r;
    }

    BiPoly operator-() const { return *this * Rational(-1); }

    BiPoly pow(unsigned e) const {
        BiPoly result = BiPoly::constant(Rational(1));
        BiPoly base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            if (e >>= 1u) base = base * base;
        }
        return result;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc(0);
        for (const auto& [key, c] : terms_)
            acc += c * rational_pow(x, key.first) * rational_pow(y, key.second);
        return acc;
    }

    double eval_double(double x, double y) const {
        double acc = 0.0;
        for (const auto& [key, c] : terms_)
            acc += to_double(c) * std::pow(x, static_cast<int>(key.first)) *
                   std::pow(y, static_cast<int>(key.second));
        return acc;
    }

    /// Sum of |coefficient| * |x|^i * |y|^j, for relative-error scales.
    double magnitude_scale(double x, double y) const {
        double acc = 0.0;
        for (const auto& [key, c] : terms_)
            acc += std::abs(to_double(c)) * std::pow(std::abs(x), static_cast<int>(key.first)) *
                   std::pow(std::abs(y), static_cast<int>(key.second));
        return acc;
    }

private:
    std::map<Key, Rational> terms_;
};

/// Sparse polynomial in one primary variable (index 0) and a family of
/// auxiliary variables (indices 1..n); used to expand products symbolically
/// before the auxiliary variables are eliminated in even powers.
class MultiPoly {
public:
    using Key = std::vector<unsigned>;

    explicit MultiPoly(unsigned variable_count) : nvars_(variable_count) {}

    static MultiPoly constant(unsigned variable_count, const Rational& c) {
        MultiPoly p(variable_count);
        p.add_term(Key(variable_count, 0u), c);
        return p;
    }

    unsigned variable_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(Key exponents, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(exponents);
        if (it == terms_.end()) {
            terms_.emplace(std::move(exponents), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Key key = ka;
                for (std::size_t v = 0; v < key.size(); ++v) key[v] += kb[v];
                r.add_term(std::move(key), ca * cb);
            }
        }
        return r;
    }

    /// Eliminates the auxiliary variables: every auxiliary exponent must be
    /// even, and aux_v^2 is replaced by the given bivariate polynomial.  The
    /// primary variable maps to the supplied bivariate image.  Terms sharing
    /// an auxiliary exponent pattern are grouped so each power product is
    /// expanded only once.
    BiPoly substitute_even(const BiPoly& primary_image,
                           const std::vector<BiPoly>& auxiliary_squares) const {
        if (auxiliary_squares.size() + 1 != nvars_)
            throw std::invalid_argument("substitution count does not match variable count");
        unsigned max_primary = 0;
        std::vector<unsigned> max_half(nvars_ > 0 ? nvars_ - 1 : 0, 0u);
        for (const auto& [key, c] : terms_) {
            max_primary = std::max(max_primary, key[0]);
            for (std::size_t v = 1; v < nvars_; ++v) {
                if (key[v] % 2 != 0)
                    throw std::logic_error("product is not even in an auxiliary variable");
                max_half[v - 1] = std::max(max_half[v - 1], key[v] / 2);
            }
        }

        std::vector<BiPoly> primary_powers;
        primary_powers.reserve(max_primary + 1);
        primary_powers.push_back(BiPoly::constant(Rational(1)));
        for (unsigned e = 1; e <= max_primary; ++e)
            primary_powers.push_back(primary_powers.back() * primary_image);

        std::vector<std::vector<BiPoly>> aux_powers(max_half.size());
        for (std::size_t v = 0; v < max_half.size(); ++v) {
            aux_powers[v].reserve(max_half[v] + 1);
            aux_powers[v].push_back(BiPoly::constant(Rational(1)));
            for (unsigned h = 1; h <= max_half[v]; ++h)
                aux_powers[v].push_back(aux_powers[v].back() * auxiliary_squares[v]);
        }

        std::map<std::vector<unsigned>, BiPoly> groups;
        for (const auto& [key, c] : terms_) {
            std::vector<unsigned> halves(nvars_ > 0 ? nvars_ - 1 : 0);
            for (std::size_t v = 1; v < nvars_; ++v) halves[v - 1] = key[v] / 2;
            groups[std::move(halves)] += primary_powers[key[0]] * c;
        }

        BiPoly result;
        for (const auto& [halves, polynomial] : groups) {
            BiPoly product = polynomial;
            for (std::size_t v = 0; v < halves.size(); ++v)
                if (halves[v] > 0) product = product * aux_powers[v][halves[v]];
            result += product;
        }
        return result;
    }

private:
    unsigned nvars_;
    std::map<Key, Rational> terms_;
};

}  // namespace fieldasym
