#pragma once

#include "unipoly.hpp"

#include <vector>

namespace fieldasym {

namespace detail {

/// Exact determinant of a square integer matrix by fraction-free Gaussian
/// elimination (Bareiss); every interior division is exact.
inline Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int previous_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous_pivot;
            }
            m[i][k] = 0;
        }
        previous_pivot = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return sign < 0 ? Int(-det) : det;
}

}  // namespace detail

/// Resultant of two nonzero polynomials, computed as the determinant of the
/// Sylvester matrix after pulling out rational contents.
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) return rational_pow(p.coeff(0), static_cast<unsigned>(n));
    if (n == 0) return rational_pow(q.coeff(0), static_cast<unsigned>(m));

    auto [cp, pp] = content_and_primitive(p);
    auto [cq, qp] = content_and_primitive(q);
    auto as_int = [](const Rational& r) { return Int(numerator(r)); };

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> sylvester(size, std::vector<Int>(size, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            sylvester[row][row + k] = as_int(pp.coeff(static_cast<unsigned>(m - k)));
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            sylvester[n + row][row + k] = as_int(qp.coeff(static_cast<unsigned>(n - k)));

    Rational scale = rational_pow(cp, static_cast<unsigned>(n)) *
                     rational_pow(cq, static_cast<unsigned>(m));
    return scale * Rational(detail::bareiss_determinant(std::move(sylvester)));
}

}  // namespace fieldasym
