#pragma once

#include "directions.hpp"

#include <vector>

namespace fieldasym {

/// Change of basis between the two shapes a direction combination can take:
/// the construction-side coefficients c_l weighting  d^l[ t^(L+1) d^(L-l) R ]
/// and the collected coefficients gamma_l weighting  t^(l+1) d^l R.  The
/// passage goes through binomial partial sums and falling factorials:
///     sigma_k = sum_{l>=k} C(l, k) c_l,
///     d_0 = sigma_0,   d_k = sigma_k (L+1) L ... (L+2-k)   for k >= 1,
///     gamma_l = d_{L-l}.
struct SigmaForm {
    unsigned order = 0;
    std::vector<Rational> input;  ///< c_l
    std::vector<Rational> sigma;
    std::vector<Rational> d;
    std::vector<Rational> gamma;
};

inline SigmaForm sigma_conversion(const std::vector<Rational>& c, unsigned order) {
    if (c.size() != order + 1)
        throw std::invalid_argument("coefficient layer size does not match order");
    bool any = false;
    for (const auto& v : c) any = any || v != 0;
    if (!any) throw std::invalid_argument("zero coefficient layer");
    SigmaForm out;
    out.order = order;
    out.input = c;
    out.sigma.assign(order + 1, Rational(0));
    for (unsigned k = 0; k <= order; ++k)
        for (unsigned l = k; l <= order; ++l)
            out.sigma[k] += Rational(binomial(l, k)) * c[l];
    out.d.assign(order + 1, Rational(0));
    Rational falling(1);
    for (unsigned k = 0; k <= order; ++k) {
        if (k >= 1) falling *= Rational(static_cast<int>(order) + 2 - static_cast<int>(k));
        out.d[k] = out.sigma[k] * falling;
    }
    out.gamma.assign(order + 1, Rational(0));
    for (unsigned l = 0; l <= order; ++l) out.gamma[l] = out.d[order - l];
    return out;
}

/// sum_l c_l d^l[ t^(L+1) d^(L-l) R ]  for the chosen kernel.
inline HalfPowerForm combination_from_construction(const std::vector<Rational>& c,
                                                   KernelKind kind, unsigned order) {
    if (c.size() != order + 1)
        throw std::invalid_argument("coefficient layer size does not match order");
    HalfPowerForm total = HalfPowerForm::zero();
    for (unsigned l = 0; l <= order; ++l) {
        if (c[l] == 0) continue;
        HalfPowerForm term =
            kernel_form(kind, order - l).times_t_power(static_cast<int>(order) + 1);
        for (unsigned k = 0; k < l; ++k) term = term.derivative();
        total = total + term.scaled(c[l]);
    }
    return total;
}

/// sum_l gamma_l t^(l+1) d^l R  for the chosen kernel.
inline HalfPowerForm combination_from_collected(const std::vector<Rational>& gamma,
                                                KernelKind kind, unsigned order) {
    if (gamma.size() != order + 1)
        throw std::invalid_argument("coefficient layer size does not match order");
    HalfPowerForm total = HalfPowerForm::zero();
    for (unsigned l = 0; l <= order; ++l) {
        if (gamma[l] == 0) continue;
        HalfPowerForm term = kernel_form(kind, l).times_t_power(static_cast<int>(l) + 1);
        total = total + term.scaled(gamma[l]);
    }
    return total;
}

/// Clearing the collected combination of its half-power denominator leaves,
/// for each kernel chain, an ordinary polynomial
///     F = sum_l gamma_l (1+x^2)^(L-l) x^l N_l
/// with N_l the chain numerator.  The pair conjecturally shares no positive
/// root for layers arising from charge configurations.
struct ConjecturePolyPair {
    unsigned order = 0;
    std::vector<Rational> gamma;
    UniPoly from_odd_chain;
    UniPoly from_even_chain;
    Rational squarefree_resultant;
    std::vector<IsolatingInterval> shared_positive_roots;
    bool distinct_positive_roots = false;
};

inline ConjecturePolyPair conjecture_poly_pair(const std::vector<Rational>& gamma,
                                               unsigned order) {
    if (gamma.size() != order + 1)
        throw std::invalid_argument("coefficient layer size does not match order");
    bool any = false;
    for (const auto& v : gamma) any = any || v != 0;
    if (!any) throw std::invalid_argument("zero coefficient layer");
    ConjecturePolyPair pair;
    pair.order = order;
    pair.gamma = gamma;
    const UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
    for (KernelKind kind : {KernelKind::Odd, KernelKind::Even}) {
        UniPoly sum;
        for (unsigned l = 0; l <= order; ++l) {
            if (gamma[l] == 0) continue;
            UniPoly term = kernel_numerator(kind, l).shifted_up(l);
            for (unsigned k = 0; k < order - l; ++k) term = term * one_plus_t2;
            sum += term * gamma[l];
        }
        (kind == KernelKind::Odd ? pair.from_odd_chain : pair.from_even_chain) = sum;
    }
    if (pair.from_odd_chain.is_zero() || pair.from_even_chain.is_zero())
        throw std::logic_error("conjecture polynomial vanished identically");

    auto stripped = [](const UniPoly& p) {
        UniPoly s = p.shifted_down(p.valuation());
        return s.degree() < 1 ? UniPoly::constant(Rational(1)) : squarefree_part(s);
    };
    UniPoly a = stripped(pair.from_odd_chain);
    UniPoly b = stripped(pair.from_even_chain);
    pair.squarefree_resultant = resultant(a, b);
    if (pair.squarefree_resultant != 0) {
        pair.distinct_positive_roots = true;
        return pair;
    }
    UniPoly shared = poly_gcd(a, b);
    auto intervals = isolate_real_roots(shared);
    UniPoly sq = shared;  // gcd of squarefree polynomials is squarefree
    const Rational zero(0);
    for (auto& interval : intervals) {
        while (interval.contains(zero) && !interval.is_point()) refine_step(sq, interval);
        if (interval.lo > 0) pair.shared_positive_roots.push_back(interval);
    }
    pair.distinct_positive_roots = pair.shared_positive_roots.empty();
    return pair;
}

}  // namespace fieldasym
