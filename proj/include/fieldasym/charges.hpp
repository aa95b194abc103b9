#pragma once

#include "rational.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fieldasym {

/// User-facing configuration problem (empty system, coincident charges,
/// identically vanishing field, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Charge {
    Rational strength;
    Rational x;
    Rational y;
};

enum class Component { X, Y };
enum class Domain { TypeI, TypeII };

inline const char* to_string(Component c) { return c == Component::X ? "X" : "Y"; }
inline const char* to_string(Domain d) { return d == Domain::TypeI ? "TypeI" : "TypeII"; }

/// Finite family of point charges at exact rational positions.  The field it
/// generates is F = (X, Y) with
///   X(p) = sum_j strength_j (p.x - x_j) / |p - p_j|^3,
///   Y(p) = sum_j strength_j (p.y - y_j) / |p - p_j|^3.
class ChargeConfiguration {
public:
    static ChargeConfiguration validated(std::vector<Charge> charges) {
        if (charges.empty()) throw ConfigError("empty configuration");
        bool any_nonzero = false;
        for (const auto& c : charges) any_nonzero = any_nonzero || c.strength != 0;
        if (!any_nonzero) throw ConfigError("trivial field: all strengths vanish");
        for (std::size_t i = 0; i < charges.size(); ++i)
            for (std::size_t j = i + 1; j < charges.size(); ++j)
                if (charges[i].x == charges[j].x && charges[i].y == charges[j].y)
                    throw ConfigError("coincident charges");
        return ChargeConfiguration(std::move(charges));
    }

    std::size_t count() const { return charges_.size(); }
    const Charge& charge(std::size_t j) const { return charges_[j]; }
    const std::vector<Charge>& charges() const { return charges_; }

    /// 1 + max_j (|x_j| + |y_j|): every charge lies inside the disk of this
    /// radius, which anchors all far-field scales.
    const Rational& position_scale() const { return position_scale_; }

    const Rational& max_strength() const { return max_strength_; }

private:
    explicit ChargeConfiguration(std::vector<Charge> charges) : charges_(std::move(charges)) {
        Rational extent(0);
        Rational amp(0);
        for (const auto& c : charges_) {
            Rational reach = abs_of(c.x) + abs_of(c.y);
            if (reach > extent) extent = reach;
            Rational a = abs_of(c.strength);
            if (a > amp) amp = a;
        }
        position_scale_ = extent + 1;
        max_strength_ = amp;
    }

    std::vector<Charge> charges_;
    Rational position_scale_;
    Rational max_strength_;
};

struct FieldValue {
    double x_component;
    double y_component;
    double min_distance;  ///< distance to the nearest charge
};

/// Direct floating-point field summation; throws if the point coincides with
/// a charge (to double precision).
inline FieldValue field_eval(const ChargeConfiguration& config, double px, double py) {
    double fx = 0.0, fy = 0.0;
    double min_distance = std::numeric_limits<double>::infinity();
    for (const auto& c : config.charges()) {
        double dx = px - to_double(c.x);
        double dy = py - to_double(c.y);
        double r2 = dx * dx + dy * dy;
        double r = std::sqrt(r2);
        min_distance = std::min(min_distance, r);
        if (r == 0.0) throw std::domain_error("singular point: field evaluated at a charge");
        double w = to_double(c.strength) / (r2 * r);
        fx += w * dx;
        fy += w * dy;
    }
    return {fx, fy, min_distance};
}

/// Local field magnitude scale sum_j |strength_j| / |p - p_j|^2, used to turn
/// absolute residuals into relative ones.
inline double field_scale(const ChargeConfiguration& config, double px, double py) {
    double acc = 0.0;
    for (const auto& c : config.charges()) {
        double dx = px - to_double(c.x);
        double dy = py - to_double(c.y);
        double r2 = dx * dx + dy * dy;
        if (r2 == 0.0) throw std::domain_error("singular point: field evaluated at a charge");
        acc += std::abs(to_double(c.strength)) / r2;
    }
    return acc;
}

/// Weighted power sum  sum_j strength_j x_j^l y_j^i  (exact).
inline Rational moment(const ChargeConfiguration& config, unsigned l, unsigned i) {
    Rational acc(0);
    for (const auto& c : config.charges())
        acc += c.strength * rational_pow(c.x, l) * rational_pow(c.y, i);
    return acc;
}

/// All moments of the smallest total degree carrying a nonzero one.
struct MomentTable {
    unsigned order = 0;  ///< smallest l+i with a nonzero moment
    std::map<std::pair<unsigned, unsigned>, Rational> moments;  ///< that degree's moments
    bool exceeds_linear_bound = false;  ///< order > count-1 (possible, but noteworthy)
};

/// Scans total degrees upward for the first nonzero moment.  A nontrivial
/// configuration of M charges always produces one by total degree 2M-1; the
/// scan overruns that bound only if an internal invariant is broken.
inline MomentTable moment_order(const ChargeConfiguration& config) {
    const unsigned hard_bound = 2 * static_cast<unsigned>(config.count()) - 1;
    for (unsigned degree = 0; degree <= hard_bound; ++degree) {
        MomentTable table;
        bool any = false;
        for (unsigned l = 0; l <= degree; ++l) {
            Rational m = moment(config, l, degree - l);
            any = any || m != 0;
            table.moments.emplace(std::make_pair(l, degree - l), std::move(m));
        }
        if (any) {
            table.order = degree;
            table.exceeds_linear_bound = degree + 1 > static_cast<unsigned>(config.count());
            return table;
        }
    }
    throw std::logic_error("no nonzero moment up to total degree 2M-1");
}

/// Membership in the far-field chart where the asymptotic analysis applies.
/// TypeI is the vertical double cone  |x/y| <= 1-delta  together with the
/// separation conditions  |y| > |y_j|  and  (|x|+|x_j|)/(|y|-|y_j|) < 1  for
/// every charge; TypeII is its mirror image under swapping x and y.
inline bool in_domain(double px, double py, const ChargeConfiguration& config, double delta,
                      Domain domain) {
    if (!(delta > 0.0) || !(delta < 0.5)) throw std::domain_error("delta outside (0, 1/2)");
    double major = domain == Domain::TypeI ? py : px;
    double minor = domain == Domain::TypeI ? px : py;
    if (std::abs(major) == 0.0 || std::abs(minor / major) > 1.0 - delta) return false;
    for (const auto& c : config.charges()) {
        double cj_major = to_double(domain == Domain::TypeI ? c.y : c.x);
        double cj_minor = to_double(domain == Domain::TypeI ? c.x : c.y);
        if (std::abs(major) <= std::abs(cj_major)) return false;
        if (std::abs(minor) + std::abs(cj_minor) >= std::abs(major) - std::abs(cj_major))
            return false;
    }
    return true;
}

}  // namespace fieldasym
