#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fieldasym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

inline Int int_pow(const Int& base, unsigned exponent) {
    Int result(1);
    Int b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

inline Int factorial(unsigned n) {
    Int f(1);
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int result(1);
    for (unsigned i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

/// Generalized binomial coefficient C(-3/2, n), the Taylor weight of
/// (1+u)^(-3/2).  Values: 1, -3/2, 15/8, -35/16, ...
inline Rational binomial_minus_three_halves(unsigned n) {
    Rational c(1);
    for (unsigned k = 0; k < n; ++k) {
        // C(a, k+1) = C(a, k) * (a - k) / (k + 1) with a = -3/2.
        c *= Rational(-3 - 2 * static_cast<int>(k), 2 * (static_cast<int>(k) + 1));
    }
    return c;
}

/// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> Int {
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits_from = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits_from) fail();
        Int value(std::string(text.substr(digits_from, pos - digits_from)));
        return negative ? Int(-value) : value;
    };
    if (text.empty()) fail();
    Int numerator = read_int(true);
    if (pos == text.size()) return Rational(numerator);
    if (text[pos] == '/') {
        ++pos;
        Int denominator = read_int(true);
        if (pos != text.size()) fail();
        if (denominator == 0) throw std::invalid_argument("zero denominator in rational");
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        return Rational(numerator, denominator);
    }
    if (text[pos] == '.') {
        ++pos;
        std::size_t frac_from = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == frac_from || pos != text.size()) fail();
        std::string frac(text.substr(frac_from, pos - frac_from));
        Int scale = int_pow(Int(10), static_cast<unsigned>(frac.size()));
        Int frac_part(frac);
        bool negative = numerator < 0 || (numerator == 0 && text[0] == '-');
        Int whole = abs(numerator) * scale + frac_part;
        return Rational(negative ? Int(-whole) : whole, scale);
    }
    return fail();
}

inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

}  // namespace fieldasym
