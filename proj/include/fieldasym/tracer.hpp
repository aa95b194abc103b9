#pragma once

#include "directions.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace fieldasym {

/// Knobs for the far-field annulus march.  Radii are multiples of the
/// configuration's position scale, so the annulus always sits far outside
/// every charge.
struct TraceParams {
    double delta = 0.1;               ///< chart opening parameter
    double inner_radius_scale = 1e3;  ///< annulus start, in position-scale units
    double outer_radius_scale = 1e4;  ///< annulus end
    unsigned angular_samples = 720;   ///< sign-change probes per ring
    unsigned radial_rings = 64;       ///< march resolution across the annulus
    double refine_tol = 1e-10;        ///< residual target relative to the field scale

    void validate() const {
        if (!(delta > 0.0) || !(delta < 0.5)) throw std::invalid_argument("delta outside (0, 1/2)");
        if (!(outer_radius_scale > inner_radius_scale) || !(inner_radius_scale > 0.0))
            throw std::invalid_argument("annulus radii out of order");
        if (angular_samples < 8 || radial_rings < 2)
            throw std::invalid_argument("trace resolution too small");
    }
};

/// Polyline approximation of one zero-curve branch inside the chart, ordered
/// from the inner ring outward.
struct CurveBranch {
    Component component;
    Domain domain;
    std::vector<std::array<double, 2>> points;
};

namespace detail {

struct RingCrossing {
    double theta;
    double x, y;
};

/// All residual-refined crossings of {component = 0} on the circle of the
/// given radius, restricted to the chart.
inline std::vector<RingCrossing> ring_crossings(const ChargeConfiguration& config,
                                                Component component, Domain domain,
                                                const TraceParams& params, double radius) {
    auto value = [&](double theta, double* px = nullptr, double* py = nullptr) {
        double x = radius * std::cos(theta);
        double y = radius * std::sin(theta);
        if (px) *px = x;
        if (py) *py = y;
        if (!in_domain(x, y, config, params.delta, domain))
            return std::numeric_limits<double>::quiet_NaN();
        FieldValue f = field_eval(config, x, y);
        return component == Component::X ? f.x_component : f.y_component;
    };
    const unsigned n = params.angular_samples;
    std::vector<double> sample(n);
    for (unsigned i = 0; i < n; ++i) sample[i] = value(2.0 * M_PI * i / n);
    std::vector<RingCrossing> crossings;
    for (unsigned i = 0; i < n; ++i) {
        double a = sample[i];
        double b = sample[(i + 1) % n];
        if (std::isnan(a)) continue;
        if (a == 0.0) {
            // Exact zero at a probe (symmetric configurations): one crossing,
            // no bisection, and no double count from the neighbor pair.
            double x, y;
            value(2.0 * M_PI * i / n, &x, &y);
            crossings.push_back({2.0 * M_PI * i / n, x, y});
            continue;
        }
        if (std::isnan(b) || !(a * b < 0.0)) continue;
        double lo = 2.0 * M_PI * i / n;
        double hi = 2.0 * M_PI * (i + 1) / n;
        double flo = a;
        double theta = 0.5 * (lo + hi);
        for (int iter = 0; iter < 200; ++iter) {
            theta = 0.5 * (lo + hi);
            double x, y;
            double f = value(theta, &x, &y);
            if (std::abs(f) <= params.refine_tol * field_scale(config, x, y)) break;
            if ((f < 0.0) == (flo < 0.0)) {
                lo = theta;
                flo = f;
            } else {
                hi = theta;
            }
        }
        double x, y;
        value(theta, &x, &y);
        crossings.push_back({theta, x, y});
    }
    return crossings;
}

inline double angular_gap(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
    return std::min(d, 2.0 * M_PI - d);
}

}  // namespace detail

/// Marches the zero set of one field component across the far-field annulus:
/// every ring is scanned for sign changes inside the chart, crossings are
/// sharpened by bisection until the residual falls under refine_tol relative
/// to the local field scale, and crossings on consecutive rings are linked
/// into branches by angular proximity.  Branches that stop crossing (the
/// curve left the chart) are truncated; crossings without a predecessor open
/// new branches.
inline std::vector<CurveBranch> trace_zero_curves(const ChargeConfiguration& config,
                                                  Component component, const TraceParams& params,
                                                  Domain domain) {
    params.validate();
    const double gamma = to_double(config.position_scale());
    const double r_min = params.inner_radius_scale * gamma;
    const double r_max = params.outer_radius_scale * gamma;
    const double window = 4.0 * 2.0 * M_PI / params.angular_samples;

    struct Active {
        CurveBranch branch;
        double theta_last;
        bool extended;
    };
    std::vector<Active> active;
    std::vector<CurveBranch> finished;
    for (unsigned k = 0; k < params.radial_rings; ++k) {
        double radius = r_min + (r_max - r_min) * k / (params.radial_rings - 1);
        auto crossings = detail::ring_crossings(config, component, domain, params, radius);
        for (auto& a : active) a.extended = false;
        std::vector<bool> claimed(crossings.size(), false);
        // Nearest-crossing extension, branches in inner-to-outer creation order.
        for (auto& a : active) {
            int best = -1;
            double best_gap = window;
            for (std::size_t i = 0; i < crossings.size(); ++i) {
                if (claimed[i]) continue;
                double gap = detail::angular_gap(a.theta_last, crossings[i].theta);
                if (gap < best_gap) {
                    best_gap = gap;
                    best = static_cast<int>(i);
                }
            }
            if (best >= 0) {
                claimed[static_cast<std::size_t>(best)] = true;
                a.branch.points.push_back({crossings[best].x, crossings[best].y});
                a.theta_last = crossings[best].theta;
                a.extended = true;
            }
        }
        for (std::size_t i = active.size(); i-- > 0;) {
            if (!active[i].extended) {
                finished.push_back(std::move(active[i].branch));
                active.erase(active.begin() + static_cast<long>(i));
            }
        }
        for (std::size_t i = 0; i < crossings.size(); ++i) {
            if (claimed[i]) continue;
            Active fresh;
            fresh.branch.component = component;
            fresh.branch.domain = domain;
            fresh.branch.points.push_back({crossings[i].x, crossings[i].y});
            fresh.theta_last = crossings[i].theta;
            fresh.extended = true;
            active.push_back(std::move(fresh));
        }
    }
    for (auto& a : active) finished.push_back(std::move(a.branch));
    return finished;
}

struct SlopeEstimate {
    std::size_t branch_index = 0;
    std::size_t point_count = 0;
    double slope = 0.0;        ///< x/y (TypeI) or y/x (TypeII) at the outermost point
    double uncertainty = 0.0;  ///< slope spread over the outer fifth of the branch
    std::optional<double> matched_root;
};

struct DirectionMatchReport {
    std::vector<SlopeEstimate> estimates;
    std::vector<std::string> notes;
};

/// Matches each sufficiently long branch against the candidate slopes of the
/// corresponding spectrum entry (including slope zero when admitted).  The
/// matching tolerance scales with the measured uncertainty.
inline DirectionMatchReport estimate_directions(const std::vector<CurveBranch>& branches,
                                                const DirectionSpectrum& spectrum_,
                                                Component component, Domain domain) {
    DirectionMatchReport report;
    const SpectrumEntry* entry = nullptr;
    for (const auto& e : spectrum_.entries)
        if (e.component == component && e.domain == domain) entry = &e;
    if (entry == nullptr) throw std::logic_error("spectrum entry missing for trace pair");
    std::vector<double> candidates;
    if (entry->zero_is_root) candidates.push_back(0.0);
    for (const auto& root : entry->roots) candidates.push_back(root.midpoint_double());

    for (std::size_t b = 0; b < branches.size(); ++b) {
        const auto& points = branches[b].points;
        if (points.size() < 10) {
            report.notes.push_back("branch " + std::to_string(b) + " skipped: only " +
                                   std::to_string(points.size()) + " points");
            continue;
        }
        auto ratio = [&](const std::array<double, 2>& p) {
            return domain == Domain::TypeI ? p[0] / p[1] : p[1] / p[0];
        };
        SlopeEstimate estimate;
        estimate.branch_index = b;
        estimate.point_count = points.size();
        estimate.slope = ratio(points.back());
        std::size_t tail = std::max<std::size_t>(2, points.size() / 5);
        double lo = estimate.slope, hi = estimate.slope;
        for (std::size_t i = points.size() - tail; i < points.size(); ++i) {
            double r = ratio(points[i]);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        estimate.uncertainty = hi - lo;
        double tolerance = 10.0 * estimate.uncertainty + 1e-3;
        double best_gap = tolerance;
        for (double candidate : candidates) {
            double gap = std::abs(estimate.slope - candidate);
            if (gap <= best_gap) {
                best_gap = gap;
                estimate.matched_root = candidate;
            }
        }
        report.estimates.push_back(estimate);
    }
    return report;
}

struct TraceOutcome {
    std::vector<CurveBranch> branches;
    DirectionMatchReport matches;
    bool reseeded = false;  ///< second pass at doubled angular resolution
};

/// Trace plus matching, with one adaptive retry at doubled angular resolution
/// when some predicted direction found no branch.
inline TraceOutcome trace_and_match(const ChargeConfiguration& config, Component component,
                                    Domain domain, const TraceParams& params,
                                    const DirectionSpectrum& spectrum_) {
    TraceOutcome outcome;
    outcome.branches = trace_zero_curves(config, component, params, domain);
    outcome.matches = estimate_directions(outcome.branches, spectrum_, component, domain);
    const SpectrumEntry* entry = nullptr;
    for (const auto& e : spectrum_.entries)
        if (e.component == component && e.domain == domain) entry = &e;
    auto any_unmatched_root = [&]() {
        std::vector<double> candidates;
        if (entry->zero_is_root) candidates.push_back(0.0);
        for (const auto& root : entry->roots) candidates.push_back(root.midpoint_double());
        for (double candidate : candidates) {
            bool seen = false;
            for (const auto& est : outcome.matches.estimates)
                seen = seen || (est.matched_root && *est.matched_root == candidate);
            if (!seen) return true;
        }
        return false;
    };
    if (any_unmatched_root()) {
        TraceParams dense = params;
        dense.angular_samples *= 2;
        outcome.branches = trace_zero_curves(config, component, dense, domain);
        outcome.matches = estimate_directions(outcome.branches, spectrum_, component, domain);
        outcome.reseeded = true;
    }
    return outcome;
}

/// Closed-form 3-D test function  U = cosh(a z) cos(b x + c y).  Its
/// Laplacian is (a^2 - b^2 - c^2) U, so the coefficient triple decides
/// harmonicity; on the plane z = 0 the z-derivative vanishes identically
/// while the xy-Hessian determinant of U is identically zero.
struct HarmonicDemoReport {
    double a = 0, b = 0, c = 0;
    bool coefficients_harmonic = false;  ///< a^2 = b^2 + c^2
    double extent = 0;
    unsigned grid_n = 0;
    double grid_h = 0;
    double max_laplacian_residual = 0;  ///< max |discrete Laplacian| / max |U|
    double max_plane_z_derivative = 0;  ///< analytic U_z on z = 0; exactly zero
    double max_hessian_determinant = 0;  ///< |U_xx U_yy - U_xy^2| on z = 0
};

inline HarmonicDemoReport harmonic_demo(double a, double b, double c, double extent,
                                        unsigned grid_n) {
    if (grid_n < 3 || !(extent > 0.0)) throw std::invalid_argument("degenerate demo grid");
    HarmonicDemoReport report;
    report.a = a;
    report.b = b;
    report.c = c;
    report.coefficients_harmonic = a * a == b * b + c * c;
    report.extent = extent;
    report.grid_n = grid_n;
    const double h = 2.0 * extent / (grid_n - 1);
    report.grid_h = h;
    auto u = [&](double x, double y, double z) { return std::cosh(a * z) * std::cos(b * x + c * y); };
    double max_u = 0.0;
    double max_residual = 0.0;
    for (unsigned i = 0; i < grid_n; ++i) {
        for (unsigned j = 0; j < grid_n; ++j) {
            for (unsigned k = 0; k < grid_n; ++k) {
                double x = -extent + h * i;
                double y = -extent + h * j;
                double z = -extent + h * k;
                double center = u(x, y, z);
                max_u = std::max(max_u, std::abs(center));
                double lap = (u(x + h, y, z) + u(x - h, y, z) + u(x, y + h, z) +
                              u(x, y - h, z) + u(x, y, z + h) + u(x, y, z - h) - 6.0 * center) /
                             (h * h);
                max_residual = std::max(max_residual, std::abs(lap));
            }
        }
    }
    report.max_laplacian_residual = max_residual / max_u;
    double max_uz = 0.0;
    double max_hessian = 0.0;
    for (unsigned i = 0; i < grid_n; ++i) {
        for (unsigned j = 0; j < grid_n; ++j) {
            double x = -extent + h * i;
            double y = -extent + h * j;
            double wave = std::cos(b * x + c * y);
            max_uz = std::max(max_uz, std::abs(a * std::sinh(0.0) * wave));
            double uxx = -b * b * wave;
            double uyy = -c * c * wave;
            double uxy = -b * c * wave;
            max_hessian = std::max(max_hessian, std::abs(uxx * uyy - uxy * uxy));
        }
    }
    report.max_plane_z_derivative = max_uz;
    report.max_hessian_determinant = max_hessian;
    return report;
}

}  // namespace fieldasym
