#pragma once

#include "charges.hpp"
#include "kernels.hpp"
#include "resultant.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fieldasym {

/// In the far field every zero branch of a component straightens out toward a
/// line through the origin.  In the TypeI chart (|x| small against |y|) the
/// candidate slopes beta = x/y of X = 0 resp. Y = 0 are the roots, inside
/// (-1, 1), of an exact polynomial built from the lowest nonvanishing moment
/// layer of the configuration; the TypeII chart (roles of x and y swapped)
/// works with alpha = y/x.  This header builds those polynomials.

/// The moment layer enters through a sign convention on the TypeII side.  The
/// two conventions differ by the global factor (-1)^order, so they define the
/// same root set; both are kept to make the choice explicit and testable.
enum class TypeTwoConvention {
    NegatedAbscissa,  ///< coefficient_l = sum_j a_j (-x_j)^(L-l) y_j^l   (default)
    NegatedOrdinate,  ///< coefficient_l = sum_j a_j (-y_j)^l x_j^(L-l)
};

/// Which reference kernel a component's asymptotic expansion contracts
/// against.  TypeI pairs X with the odd kernel and Y with the even one; the
/// TypeII chart swaps the roles along with the coordinates.  (The numerical
/// tracer cross-validates this pairing on configurations with order >= 1.)
inline KernelKind component_kernel(Component component, Domain domain) {
    bool wants_odd = (component == Component::X) == (domain == Domain::TypeI);
    return wants_odd ? KernelKind::Odd : KernelKind::Even;
}

struct DirectionCoefficients {
    Domain domain;
    unsigned order = 0;
    std::vector<Rational> values;  ///< index l = 0..order
};

inline DirectionCoefficients direction_coefficients(
    const ChargeConfiguration& config, Domain domain,
    TypeTwoConvention convention = TypeTwoConvention::NegatedAbscissa) {
    MomentTable table = moment_order(config);
    const unsigned L = table.order;
    DirectionCoefficients out{domain, L, std::vector<Rational>(L + 1, Rational(0))};
    auto layer = [&](unsigned l, unsigned i) { return table.moments.at({l, i}); };
    bool all_zero = true;
    for (unsigned l = 0; l <= L; ++l) {
        Rational value;
        if (domain == Domain::TypeI) {
            value = (l % 2 == 0 ? 1 : -1) * layer(l, L - l);
        } else if (convention == TypeTwoConvention::NegatedAbscissa) {
            value = ((L - l) % 2 == 0 ? 1 : -1) * layer(L - l, l);
        } else {
            value = (l % 2 == 0 ? 1 : -1) * layer(L - l, l);
        }
        all_zero = all_zero && value == 0;
        out.values[l] = std::move(value);
    }
    if (all_zero)
        throw std::logic_error("direction coefficients vanished at the moment order");
    return out;
}

enum class Variant {
    Authoritative,  ///< sum_l w_l t^(-l-1) d^(L-l)[ (d^l R) t^(L+1) ]
    Closed,    ///< the same without the trailing t^(-l-1) factor
    Remark,         ///< sum_l w_l d^l[ t^(-1) d^(L-l)( t^(L-l+1) R ) ]
};

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::Authoritative: return "authoritative";
        case Variant::Closed: return "closed";
        case Variant::Remark: return "remark";
    }
    return "?";
}

/// One candidate-direction equation in cleared form.
struct DirectionPolynomial {
    Component component;
    Domain domain;
    Variant variant;
    unsigned order = 0;
    HalfPowerForm form;

    /// Slope zero is a candidate direction iff the cleared numerator vanishes
    /// at the origin with no pole in front of it.
    bool zero_is_root() const {
        return form.finite_at_zero() && !form.is_zero() && form.numerator.coeff(0) == 0;
    }
};

/// Assembles one variant of the direction form from a coefficient layer.
/// Every term reuses the memoized kernel derivative chain and carries the
/// weight  coefficient_l / (l! (L-l)!).
inline HalfPowerForm combine_direction_terms(const std::vector<Rational>& coefficients,
                                             KernelKind kind, Variant variant) {
    if (coefficients.empty()) throw std::invalid_argument("empty coefficient layer");
    const unsigned L = static_cast<unsigned>(coefficients.size()) - 1;
    HalfPowerForm total = HalfPowerForm::zero();
    for (unsigned l = 0; l <= L; ++l) {
        if (coefficients[l] == 0) continue;
        HalfPowerForm term;
        if (variant == Variant::Remark) {
            term = base_kernel(kind).times_t_power(static_cast<int>(L - l) + 1);
            for (unsigned k = 0; k < L - l; ++k) term = term.derivative();
            term = term.times_t_power(-1);
            for (unsigned k = 0; k < l; ++k) term = term.derivative();
        } else {
            term = kernel_form(kind, l).times_t_power(static_cast<int>(L) + 1);
            for (unsigned k = 0; k < L - l; ++k) term = term.derivative();
            if (variant == Variant::Authoritative)
                term = term.times_t_power(-(static_cast<int>(l) + 1));
        }
        Rational weight = coefficients[l] / Rational(factorial(l) * factorial(L - l));
        total = total + term.scaled(weight);
    }
    if (total.is_zero())
        throw std::logic_error("direction polynomial vanished identically");
    return total;
}

inline DirectionPolynomial zeroing_form(
    const ChargeConfiguration& config, Component component, Domain domain, Variant variant,
    TypeTwoConvention convention = TypeTwoConvention::NegatedAbscissa) {
    DirectionCoefficients coefficients = direction_coefficients(config, domain, convention);
    HalfPowerForm form =
        combine_direction_terms(coefficients.values, component_kernel(component, domain), variant);
    return {component, domain, variant, coefficients.order, std::move(form)};
}

/// Distinct roots of the cleared numerator strictly inside (-1, 1), excluding
/// slope zero, refined to width 1e-12.
inline std::vector<IsolatingInterval> unit_interval_roots(const UniPoly& numerator) {
    if (numerator.is_zero()) return {};
    UniPoly n = numerator.shifted_down(numerator.valuation());
    const UniPoly at_plus_one{Rational(-1), Rational(1)};
    const UniPoly at_minus_one{Rational(1), Rational(1)};
    while (n.degree() > 0 && n.eval(Rational(1)) == 0) n = n.divided_exactly(at_plus_one);
    while (n.degree() > 0 && n.eval(Rational(-1)) == 0) n = n.divided_exactly(at_minus_one);
    if (n.degree() < 1) return {};
    auto intervals = isolate_real_roots(n);
    UniPoly sq = squarefree_part(n);
    std::vector<IsolatingInterval> kept;
    const Rational one(1);
    for (auto& interval : intervals) {
        while (interval.contains(-one) || interval.contains(one)) refine_step(sq, interval);
        if (interval.lo > -one && interval.hi < one) kept.push_back(interval);
    }
    const Rational width(Int(1), int_pow(Int(10), 12));
    for (auto& interval : kept) refine_to_width(sq, interval, width);
    return kept;
}

struct SpectrumEntry {
    Component component;
    Domain domain;
    DirectionPolynomial polynomial;
    bool zero_is_root = false;
    std::vector<IsolatingInterval> roots;  ///< nonzero candidate slopes in (-1, 1)
    unsigned root_bound = 0;               ///< 2*order + 1
    bool within_bound = false;
};

struct DomainDistinctness {
    Domain domain;
    Rational squarefree_resultant;  ///< of the stripped squarefree numerators
    bool distinct_everywhere = false;
    bool distinct_in_unit = false;  ///< no shared nonzero candidate slope in (-1, 1)
    bool zero_shared = false;       ///< both components admit slope zero
    std::vector<IsolatingInterval> shared_unit_roots;
};

struct DirectionSpectrum {
    unsigned order = 0;
    std::vector<SpectrumEntry> entries;          ///< X/Y x TypeI/TypeII
    std::vector<DomainDistinctness> distinctness;  ///< per domain
};

namespace detail {

/// Numerator with its powers of t removed; constant when there is no nonzero
/// root at all.
inline UniPoly stripped_numerator(const DirectionPolynomial& p) {
    const UniPoly& n = p.form.numerator;
    return n.is_zero() ? UniPoly::constant(Rational(1)) : n.shifted_down(n.valuation());
}

}  // namespace detail

inline DirectionSpectrum spectrum(const ChargeConfiguration& config) {
    DirectionSpectrum result;
    std::map<Domain, std::vector<std::size_t>> by_domain;
    for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
        for (Component component : {Component::X, Component::Y}) {
            SpectrumEntry entry;
            entry.component = component;
            entry.domain = domain;
            entry.polynomial = zeroing_form(config, component, domain, Variant::Authoritative);
            entry.zero_is_root = entry.polynomial.zero_is_root();
            entry.roots = unit_interval_roots(entry.polynomial.form.numerator);
            entry.root_bound = 2 * entry.polynomial.order + 1;
            entry.within_bound = entry.roots.size() <= entry.root_bound;
            result.order = entry.polynomial.order;
            by_domain[domain].push_back(result.entries.size());
            result.entries.push_back(std::move(entry));
        }
    }
    for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
        const SpectrumEntry& ex = result.entries[by_domain[domain][0]];
        const SpectrumEntry& ey = result.entries[by_domain[domain][1]];
        DomainDistinctness d;
        d.domain = domain;
        d.zero_shared = ex.zero_is_root && ey.zero_is_root;
        UniPoly a = squarefree_part(detail::stripped_numerator(ex.polynomial));
        UniPoly b = squarefree_part(detail::stripped_numerator(ey.polynomial));
        d.squarefree_resultant = resultant(a, b);
        d.distinct_everywhere = d.squarefree_resultant != 0;
        if (d.distinct_everywhere) {
            d.distinct_in_unit = true;
        } else {
            d.shared_unit_roots = unit_interval_roots(poly_gcd(a, b));
            d.distinct_in_unit = d.shared_unit_roots.empty();
        }
        result.distinctness.push_back(std::move(d));
    }
    return result;
}

/// Exact truncated Laurent evaluation of the asymptotic expansion, fully
/// independent of the half-power calculus: only binomial coefficients and
/// powers of the slope enter.  Odd-kernel pattern
///     sum_l w_l t^-l sum_n C(-3/2,n) C(2n+1,l) C(L-l+2n+2,2n+2) t^(2n+1),
/// even-kernel pattern
///     sum_l w_l t^-l sum_n C(-3/2,n) C(2n,l)   C(L-l+2n+1,2n+1) t^(2n).
inline double series_eval(const ChargeConfiguration& config, Component component, Domain domain,
                          double t, unsigned n_max = 80,
                          TypeTwoConvention convention = TypeTwoConvention::NegatedAbscissa) {
    if (n_max < 1) throw std::invalid_argument("series truncation must be positive");
    if (!(t > -1.0 && t < 1.0))
        throw std::domain_error("slope outside the convergence interval (-1, 1)");
    DirectionCoefficients coefficients = direction_coefficients(config, domain, convention);
    const unsigned L = coefficients.order;
    const bool odd = component_kernel(component, domain) == KernelKind::Odd;

    if (t == 0.0) {
        // Exact Laurent coefficients at nonpositive exponents decide between
        // a finite value and a pole.
        std::map<int, Rational> low_part;
        for (unsigned l = 0; l <= L; ++l) {
            if (coefficients.values[l] == 0) continue;
            for (unsigned n = 0; n <= n_max; ++n) {
                int exponent = static_cast<int>(odd ? 2 * n + 1 : 2 * n) - static_cast<int>(l);
                if (exponent > 0) break;
                Int pattern = odd ? binomial(2 * n + 1, l) * binomial(L - l + 2 * n + 2, 2 * n + 2)
                                  : binomial(2 * n, l) * binomial(L - l + 2 * n + 1, 2 * n + 1);
                low_part[exponent] += coefficients.values[l] *
                                      binomial_minus_three_halves(n) * Rational(pattern);
            }
        }
        for (const auto& [exponent, value] : low_part)
            if (exponent < 0 && value != 0) throw std::domain_error("pole at zero");
        auto it = low_part.find(0);
        return it == low_part.end() ? 0.0 : to_double(it->second);
    }

    double total = 0.0;
    for (unsigned l = 0; l <= L; ++l) {
        if (coefficients.values[l] == 0) continue;
        double inner = 0.0;
        double weight = 1.0;  // C(-3/2, n), updated per n
        double t_power = odd ? t : 1.0;
        for (unsigned n = 0; n <= n_max; ++n) {
            Int pattern = odd ? binomial(2 * n + 1, l) * binomial(L - l + 2 * n + 2, 2 * n + 2)
                              : binomial(2 * n, l) * binomial(L - l + 2 * n + 1, 2 * n + 1);
            inner += weight * pattern.template convert_to<double>() * t_power;
            weight *= -(3.0 + 2.0 * n) / (2.0 * (n + 1.0));
            t_power *= t * t;
        }
        total += to_double(coefficients.values[l]) * inner / std::pow(t, static_cast<int>(l));
    }
    return total;
}

struct VariantComparisonReport {
    Component component;
    Domain domain;
    unsigned order = 0;
    bool remark_matches_authoritative = false;   ///< exact equality of functions
    std::optional<bool> closed_is_slope_shift;   ///< order 0 only: closed = t * authoritative
    bool closed_roots_match_complex = false;     ///< squarefree parts proportional
    bool closed_roots_match_real = false;        ///< same nonzero real roots
    std::string details;
};

/// Exact comparison of the three construction variants for one component.
inline VariantComparisonReport variant_comparison(const ChargeConfiguration& config,
                                                  Component component, Domain domain) {
    DirectionPolynomial authoritative =
        zeroing_form(config, component, domain, Variant::Authoritative);
    DirectionPolynomial closed = zeroing_form(config, component, domain, Variant::Closed);
    DirectionPolynomial remark = zeroing_form(config, component, domain, Variant::Remark);

    VariantComparisonReport report;
    report.component = component;
    report.domain = domain;
    report.order = authoritative.order;
    report.remark_matches_authoritative =
        remark.form.same_function_as(authoritative.form);
    if (report.order == 0)
        report.closed_is_slope_shift =
            closed.form.same_function_as(authoritative.form.times_t_power(1));

    UniPoly a = squarefree_part(detail::stripped_numerator(authoritative));
    UniPoly c = squarefree_part(detail::stripped_numerator(closed));
    report.closed_roots_match_complex = proportional(a, c);
    UniPoly g = poly_gcd(a, c);
    UniPoly extra_a = g.degree() > 0 ? a.divided_exactly(g) : a;
    UniPoly extra_c = g.degree() > 0 ? c.divided_exactly(g) : c;
    report.closed_roots_match_real = count_distinct_real_roots(extra_a) == 0 &&
                                     count_distinct_real_roots(extra_c) == 0;

    std::ostringstream details;
    details << to_string(component) << "/" << to_string(domain) << " order " << report.order
            << ": remark" << (report.remark_matches_authoritative ? " == " : " != ")
            << "authoritative";
    if (report.closed_is_slope_shift)
        details << "; closed " << (*report.closed_is_slope_shift ? "==" : "!=")
                << " t*authoritative";
    details << "; closed/authoritative nonzero real roots "
            << (report.closed_roots_match_real ? "agree" : "differ");
    report.details = details.str();
    return report;
}

}  // namespace fieldasym
