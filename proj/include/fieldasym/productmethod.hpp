#pragma once

#include "bipoly.hpp"
#include "charges.hpp"
#include "scan.hpp"

#include <cmath>
#include <vector>

namespace fieldasym {

/// Multiplying a field component over all 2^M sign flips of the charge
/// strengths clears every radical: with chi_j the distance to charge j,
///     prod_sigma  sum_j sigma_j a_j (x - x_j) prod_{k != j} chi_k
/// contains only even chi powers, and substituting chi_j^2 = |p - p_j|^2
/// (cubed, as the field carries r^-3) yields an honest polynomial that
/// vanishes on the whole zero set of the component.
struct ProductPolynomials {
    BiPoly from_x_component;  ///< vanishes on {X = 0}
    BiPoly from_y_component;  ///< vanishes on {Y = 0}
    int degree_x = -1;
    int degree_y = -1;
};

inline ProductPolynomials product_polynomials(const ChargeConfiguration& config) {
    const unsigned m = static_cast<unsigned>(config.count());
    if (m > 3) throw std::invalid_argument("expansion too large beyond three charges");
    std::vector<BiPoly> chi_squares;
    chi_squares.reserve(m);
    for (const auto& c : config.charges()) {
        BiPoly dist2;
        dist2.add_term(2, 0, Rational(1));
        dist2.add_term(1, 0, Rational(-2) * c.x);
        dist2.add_term(0, 2, Rational(1));
        dist2.add_term(0, 1, Rational(-2) * c.y);
        dist2.add_term(0, 0, c.x * c.x + c.y * c.y);
        chi_squares.push_back(dist2.pow(3));
    }
    ProductPolynomials out;
    for (Component component : {Component::X, Component::Y}) {
        MultiPoly product = MultiPoly::constant(m + 1, Rational(1));
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            MultiPoly factor(m + 1);
            for (unsigned j = 0; j < m; ++j) {
                Rational signed_strength =
                    (mask >> j) & 1u ? Rational(-config.charge(j).strength)
                                     : config.charge(j).strength;
                const Rational& center = component == Component::X ? config.charge(j).x
                                                                   : config.charge(j).y;
                MultiPoly::Key with_coordinate(m + 1, 0u);
                with_coordinate[0] = 1;
                for (unsigned k = 0; k < m; ++k)
                    if (k != j) with_coordinate[k + 1] = 1;
                MultiPoly::Key constant_part = with_coordinate;
                constant_part[0] = 0;
                factor.add_term(std::move(with_coordinate), signed_strength);
                factor.add_term(std::move(constant_part), -signed_strength * center);
            }
            product = product * factor;
        }
        BiPoly coordinate = component == Component::X ? BiPoly::monomial(Rational(1), 1, 0)
                                                      : BiPoly::monomial(Rational(1), 0, 1);
        BiPoly expanded = product.substitute_even(coordinate, chi_squares);
        if (component == Component::X) {
            out.from_x_component = std::move(expanded);
            out.degree_x = out.from_x_component.total_degree();
        } else {
            out.from_y_component = std::move(expanded);
            out.degree_y = out.from_y_component.total_degree();
        }
    }
    return out;
}

struct ContainmentSample {
    double x = 0.0;
    double y = 0.0;
    double relative_value = 0.0;  ///< |product polynomial| over its magnitude scale
};

struct ContainmentReport {
    unsigned requested = 0;
    unsigned found = 0;
    double max_relative = 0.0;
    std::vector<ContainmentSample> samples;
};

/// Locates zeros of the chosen field component by sign-change bisection along
/// random segments and evaluates the product polynomial there; containment of
/// the zero set predicts a tiny relative value at every sample.
inline ContainmentReport containment_check(const ChargeConfiguration& config,
                                           const ProductPolynomials& product,
                                           Component component, unsigned samples,
                                           std::uint64_t seed) {
    const BiPoly& poly =
        component == Component::X ? product.from_x_component : product.from_y_component;
    ContainmentReport report;
    report.requested = samples;
    DeterministicRng rng(seed);
    const double box = 3.0 * to_double(config.position_scale());
    auto component_value = [&](double x, double y) {
        FieldValue f = field_eval(config, x, y);
        return component == Component::X ? f.x_component : f.y_component;
    };
    auto clear_of_charges = [&](double x, double y, double margin) {
        for (const auto& c : config.charges()) {
            double dx = x - to_double(c.x);
            double dy = y - to_double(c.y);
            if (dx * dx + dy * dy < margin * margin) return false;
        }
        return true;
    };
    const unsigned max_attempts = 400 * samples;
    for (unsigned attempt = 0; attempt < max_attempts && report.found < samples; ++attempt) {
        double x0 = box * (2.0 * rng.unit() - 1.0);
        double y0 = box * (2.0 * rng.unit() - 1.0);
        double x1 = box * (2.0 * rng.unit() - 1.0);
        double y1 = box * (2.0 * rng.unit() - 1.0);
        if (!clear_of_charges(x0, y0, 1e-6) || !clear_of_charges(x1, y1, 1e-6)) continue;
        double f0 = component_value(x0, y0);
        double f1 = component_value(x1, y1);
        if (!(f0 * f1 < 0.0)) continue;
        double lo = 0.0, hi = 1.0;
        for (int iter = 0; iter < 80; ++iter) {
            double mid = 0.5 * (lo + hi);
            double fx = component_value(x0 + mid * (x1 - x0), y0 + mid * (y1 - y0));
            if (fx == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fx < 0.0) == (f0 < 0.0)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        double s = 0.5 * (lo + hi);
        double zx = x0 + s * (x1 - x0);
        double zy = y0 + s * (y1 - y0);
        // A sign change can also come from a pole flip across a charge.
        if (!clear_of_charges(zx, zy, 1e-4)) continue;
        double scale = poly.magnitude_scale(zx, zy);
        // A vanishing coefficient-magnitude scale forces |P| = 0 by the
        // triangle inequality (only exact coordinate-axis hits do this), so
        // the containment is exact there.
        double relative = scale > 0.0 ? std::abs(poly.eval_double(zx, zy)) / scale : 0.0;
        ContainmentSample sample{zx, zy, relative};
        report.max_relative = std::max(report.max_relative, sample.relative_value);
        report.samples.push_back(sample);
        ++report.found;
    }
    return report;
}

inline ContainmentReport containment_check(const ChargeConfiguration& config,
                                           Component component, unsigned samples,
                                           std::uint64_t seed) {
    return containment_check(config, product_polynomials(config), component, samples, seed);
}

/// Component count band for a real plane curve of degree m: at least one oval
/// when the degree is odd, and at most the Harnack number
/// (m-1)(m-2)/2 + 1 components.
inline std::pair<long long, long long> harnack_bound(long long degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    long long lower = degree % 2 == 0 ? 0 : 1;
    long long upper = (degree - 1) * (degree - 2) / 2 + 1;
    return {lower, upper};
}

/// Upper bound on the number of asymptotic directions that the product
/// polynomial route yields for M charges: 9 (M-1)^2 4^(M-1) + 1.
inline long long direction_count_bound(unsigned charge_count) {
    if (charge_count < 1) throw std::invalid_argument("charge count must be positive");
    long long m = charge_count;
    long long pow4 = 1;
    for (unsigned i = 1; i < charge_count; ++i) pow4 *= 4;
    return 9 * (m - 1) * (m - 1) * pow4 + 1;
}

/// The literature quotes total degree 3 (M-1) 2^(M-1) for the cleared product;
/// a direct count of factor degrees gives 2^M (1 + 3(M-1)).  This report puts
/// the measured degree next to both numbers.
struct DegreeClaimReport {
    unsigned charge_count = 0;
    int measured_degree_x = -1;
    int measured_degree_y = -1;
    long long claimed_degree = 0;
    long long factor_degree_sum = 0;
    bool claim_consistent_x = false;  ///< measured <= claimed
    bool claim_consistent_y = false;
};

inline DegreeClaimReport degree_claim_check(const ChargeConfiguration& config,
                                            const ProductPolynomials& product) {
    DegreeClaimReport report;
    report.charge_count = static_cast<unsigned>(config.count());
    report.measured_degree_x = product.degree_x;
    report.measured_degree_y = product.degree_y;
    long long m = report.charge_count;
    long long pow2 = 1;
    for (unsigned i = 1; i < report.charge_count; ++i) pow2 *= 2;
    report.claimed_degree = 3 * (m - 1) * pow2;
    report.factor_degree_sum = (2 * pow2) * (1 + 3 * (m - 1));
    report.claim_consistent_x = report.measured_degree_x <= report.claimed_degree;
    report.claim_consistent_y = report.measured_degree_y <= report.claimed_degree;
    return report;
}

inline DegreeClaimReport degree_claim_check(const ChargeConfiguration& config) {
    return degree_claim_check(config, product_polynomials(config));
}

}  // namespace fieldasym
