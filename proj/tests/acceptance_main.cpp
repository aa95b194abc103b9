/// Acceptance harness: runs the eleven go/no-go checks for the library with
/// one PASS/FAIL line each and a nonzero exit code when any check is in an
/// unexpected state.  Check 9 contains a documented expected failure (the
/// quoted dipole degree 16 versus the measured 14); it is reported as
/// "FAIL (expected)" and does not fail the run, but an unexpected flip to 16
/// would.

#include <fieldasym/productmethod.hpp>
#include <fieldasym/scan.hpp>
#include <fieldasym/sigma.hpp>
#include <fieldasym/tracer.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace fieldasym;

namespace {

enum class Verdict { Pass, Fail, ExpectedFail };

using Lines = std::vector<std::string>;

struct Criterion {
    int number;
    std::string title;
    std::function<Verdict(Lines&)> run;
    long long time_limit_ms = 0;  ///< 0 = no wall-clock budget for this check
};

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

/// Sum of |coefficient| * |t|^i: a rounding-error scale for evaluating the
/// numerator at t.
double numerator_scale(const UniPoly& n, double t) {
    double scale = 0.0, power = 1.0;
    for (unsigned i = 0; i <= static_cast<unsigned>(std::max(n.degree(), 0)); ++i) {
        scale += std::abs(to_double(n.coeff(i))) * power;
        power *= std::abs(t);
    }
    return scale;
}

std::string describe(const ChargeConfiguration& config) {
    std::ostringstream out;
    for (const auto& c : config.charges())
        out << " (" << format_rational(c.strength) << " at " << format_rational(c.x) << ","
            << format_rational(c.y) << ")";
    return out.str();
}

/// Random configuration, with every second multi-charge draw rebalanced to a
/// zero strength total so that moment orders above zero actually occur.
ChargeConfiguration random_config_mixed(DeterministicRng& rng, unsigned max_charges) {
    ChargeConfiguration config = random_configuration(rng, max_charges, 5, 5);
    if (config.count() < 2 || rng.below(2) != 0) return config;
    std::vector<Charge> charges = config.charges();
    Rational total(0);
    for (std::size_t j = 0; j + 1 < charges.size(); ++j) total += charges[j].strength;
    charges.back().strength = -total;
    try {
        return ChargeConfiguration::validated(std::move(charges));
    } catch (const ConfigError&) {
        return config;  // rebalancing produced an all-zero strength vector
    }
}

std::string order_histogram(const std::vector<unsigned>& orders) {
    std::map<unsigned, unsigned> counts;
    for (unsigned order : orders) ++counts[order];
    std::ostringstream out;
    out << "moment orders seen:";
    for (const auto& [order, n] : counts) out << " " << order << " x" << n;
    return out.str();
}

// ---------------------------------------------------------------- criterion 1

Verdict kernel_oracle(Lines& lines) {
    bool ok = true;
    for (KernelKind kind : {KernelKind::Odd, KernelKind::Even}) {
        HalfPowerForm form = base_kernel(kind);
        for (unsigned l = 0; l <= 20; ++l) {
            if (l > 0) form = form.derivative();
            const UniPoly& recurrence = kernel_numerator(kind, l);
            unsigned expected_degree = kind == KernelKind::Odd ? l + 1 : l;
            if (recurrence.degree() != static_cast<int>(expected_degree)) {
                lines.push_back("degree law broken at " + std::string(to_string(kind)) +
                                " order " + std::to_string(l));
                ok = false;
            }
            if (l <= 12 && !form.same_function_as(kernel_form(kind, l))) {
                lines.push_back("recurrence and quotient-rule derivative differ at " +
                                std::string(to_string(kind)) + " order " + std::to_string(l));
                ok = false;
            }
        }
    }
    if (ok)
        lines.push_back(
            "recurrence == repeated quotient-rule derivative for l <= 12; "
            "degrees l+1 / l verified for l <= 20");
    return ok ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 2

Verdict kernel_identity(Lines& lines) {
    const UniPoly one_plus_t2{Rational(1), Rational(0), Rational(1)};
    const UniPoly t{Rational(0), Rational(1)};
    bool ok = true;
    for (unsigned l = 1; l <= 12; ++l) {
        UniPoly rhs = Rational(l) * (kernel_numerator(KernelKind::Even, l - 1) * one_plus_t2) +
                      t * kernel_numerator(KernelKind::Even, l);
        if (!(kernel_numerator(KernelKind::Odd, l) == rhs)) {
            lines.push_back("identity fails at order " + std::to_string(l));
            ok = false;
        }
    }
    if (ok) lines.push_back("P_l = l Q_(l-1) (1+t^2) + t Q_l exactly for 1 <= l <= 12");
    return ok ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 3

Verdict kernel_interlacing(Lines& lines) {
    bool ok = true;
    for (unsigned l = 1; l <= 10; ++l) {
        KernelInterlacingReport report = kernel_interlacing_check(l);
        if (!report.all_real || !report.strictly_interlacing) {
            lines.push_back("order " + std::to_string(l) + ": all_real=" +
                            std::to_string(report.all_real) + " interlacing=" +
                            std::to_string(report.strictly_interlacing));
            ok = false;
        }
    }
    if (ok) lines.push_back("roots all real and strictly interlacing for 1 <= l <= 10");
    return ok ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 4

Verdict series_vs_closed(Lines& lines) {
    DeterministicRng rng(404);
    const double ts[] = {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75};
    unsigned checked = 0, violations = 0;
    double worst = 0.0;
    std::vector<unsigned> orders;
    for (unsigned trial = 0; trial < 50; ++trial) {
        ChargeConfiguration config = random_config_mixed(rng, 4);
        orders.push_back(moment_order(config).order);
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                DirectionPolynomial closed =
                    zeroing_form(config, component, domain, Variant::Authoritative);
                for (double t : ts) {
                    double a = closed.form.eval_double(t);
                    double b = series_eval(config, component, domain, t, 80);
                    double denom = std::max(std::abs(a), std::abs(b));
                    double gap = std::abs(a - b);
                    // Near a root both values cancel to rounding noise; the
                    // numerator magnitude supplies the honest error scale.
                    double floor = 1e-12 * numerator_scale(closed.form.numerator, t);
                    bool close = gap <= 1e-9 * denom || gap <= floor;
                    if (denom > 0.0) worst = std::max(worst, gap / std::max(denom, floor));
                    ++checked;
                    if (!close) {
                        ++violations;
                        if (violations <= 5)
                            lines.push_back("mismatch at t=" + fmt(t) + " gap=" + fmt(gap) +
                                            " config" + describe(config));
                    }
                }
            }
        }
    }
    lines.push_back(std::to_string(checked) + " evaluations over 50 configurations, worst "
                    "relative deviation " + fmt(worst));
    lines.push_back(order_histogram(orders));
    return violations == 0 ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 5

Verdict root_count_bound(Lines& lines) {
    DeterministicRng rng(505);
    unsigned violations = 0;
    std::vector<unsigned> orders;
    for (unsigned trial = 0; trial < 200; ++trial) {
        ChargeConfiguration config = random_config_mixed(rng, 4);
        orders.push_back(moment_order(config).order);
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                DirectionPolynomial p =
                    zeroing_form(config, component, domain, Variant::Authoritative);
                const UniPoly& n = p.form.numerator;
                if (n.is_zero()) continue;
                int nonzero = count_distinct_real_roots(n.shifted_down(n.valuation()));
                if (nonzero > static_cast<int>(2 * p.order + 1)) {
                    ++violations;
                    lines.push_back("bound exceeded: " + std::to_string(nonzero) + " > " +
                                    std::to_string(2 * p.order + 1) + " for " +
                                    to_string(component) + "/" + to_string(domain) +
                                    " of config" + describe(config));
                }
            }
        }
    }
    if (violations == 0)
        lines.push_back("all numerators of 200 configurations stay within 2L+1 nonzero "
                        "real roots");
    lines.push_back(order_histogram(orders));
    return violations == 0 ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 6

Verdict tracer_cross_validation(Lines& lines) {
    DeterministicRng rng(606);
    TraceParams params;
    unsigned estimates = 0, branches = 0, violations = 0, reseeds = 0;
    double worst = 0.0;
    std::vector<unsigned> orders;
    for (unsigned trial = 0; trial < 20; ++trial) {
        ChargeConfiguration config = random_config_mixed(rng, 3);
        orders.push_back(moment_order(config).order);
        DirectionSpectrum s = spectrum(config);
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                TraceOutcome outcome = trace_and_match(config, component, domain, params, s);
                branches += outcome.branches.size();
                if (outcome.reseeded) ++reseeds;
                for (const auto& est : outcome.matches.estimates) {
                    ++estimates;
                    double gap = est.matched_root
                                     ? std::abs(est.slope - *est.matched_root)
                                     : std::numeric_limits<double>::infinity();
                    worst = std::max(worst, est.matched_root ? gap : 0.0);
                    if (gap > 1e-3) {
                        ++violations;
                        lines.push_back("slope " + fmt(est.slope) + " of " +
                                        std::string(to_string(component)) + "/" +
                                        to_string(domain) + " matches no candidate within "
                                        "1e-3 for config" + describe(config));
                    }
                }
            }
        }
    }
    lines.push_back(std::to_string(branches) + " branches / " + std::to_string(estimates) +
                    " slope estimates over 20 configurations, worst matched gap " +
                    fmt(worst) + ", " + std::to_string(reseeds) + " retraced");
    lines.push_back(order_histogram(orders));
    return violations == 0 ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 7

/// Candidate slope sets of the two components, as exactly separated interval
/// lists; returns false when a shared candidate or a non-alternating merge is
/// found.
bool spectra_interlace(const SpectrumEntry& ex, const SpectrumEntry& ey, std::string& why) {
    if (ex.zero_is_root && ey.zero_is_root) {
        why = "both components admit slope zero";
        return false;
    }
    UniPoly sx = squarefree_part(
        ex.polynomial.form.numerator.shifted_down(ex.polynomial.form.numerator.valuation()));
    UniPoly sy = squarefree_part(
        ey.polynomial.form.numerator.shifted_down(ey.polynomial.form.numerator.valuation()));
    UniPoly g = poly_gcd(sx, sy);
    if (g.degree() > 0 && !unit_interval_roots(g).empty()) {
        why = "shared nonzero candidate slope";
        return false;
    }
    struct Tagged {
        IsolatingInterval interval;
        const UniPoly* refine_with;  // nullptr for the exact slope-zero point
        int tag;
    };
    std::vector<Tagged> all;
    auto add = [&](const SpectrumEntry& e, const UniPoly* sq, int tag) {
        if (e.zero_is_root) all.push_back({{Rational(0), Rational(0), 1}, nullptr, tag});
        for (const auto& r : e.roots) all.push_back({r, sq, tag});
    };
    add(ex, &sx, 0);
    add(ey, &sy, 1);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].tag == all[j].tag) continue;
            auto disjoint = [&] {
                return all[i].interval.hi < all[j].interval.lo ||
                       all[j].interval.hi < all[i].interval.lo;
            };
            while (!disjoint()) {
                Tagged& wider = all[i].interval.width() >= all[j].interval.width() ? all[i]
                                                                                  : all[j];
                if (wider.refine_with == nullptr) {
                    why = "cannot separate candidates";  // zero point inside both: shared
                    return false;
                }
                refine_step(*wider.refine_with, wider.interval);
            }
        }
    std::sort(all.begin(), all.end(),
              [](const Tagged& a, const Tagged& b) { return a.interval.lo < b.interval.lo; });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].tag == all[i - 1].tag) {
            why = "two consecutive candidates from the same component";
            return false;
        }
    if (all.empty()) {
        why = "no candidates at all";
        return false;
    }
    return true;
}

Verdict collinear_interlacing(Lines& lines) {
    DeterministicRng rng(707);
    unsigned violations = 0;
    for (unsigned trial = 0; trial < 50; ++trial) {
        ChargeConfiguration config = [&] {
            while (true) {
                unsigned m = 1 + static_cast<unsigned>(rng.below(3));
                std::vector<Charge> charges;
                for (unsigned j = 0; j < m; ++j) {
                    Charge c;
                    do {
                        c.strength = random_rational(rng, 5, 5);
                    } while (c.strength == 0);
                    long long den = rng.int_in(1, 5);
                    c.x = Rational(Int(rng.int_in(1, 2 * den)), Int(den));
                    c.y = Rational(0);
                    charges.push_back(std::move(c));
                }
                try {
                    return ChargeConfiguration::validated(std::move(charges));
                } catch (const ConfigError&) {
                    continue;
                }
            }
        }();
        DirectionSpectrum s = spectrum(config);
        const SpectrumEntry* ex = nullptr;
        const SpectrumEntry* ey = nullptr;
        for (const auto& e : s.entries) {
            if (e.domain != Domain::TypeI) continue;
            (e.component == Component::X ? ex : ey) = &e;
        }
        std::string why;
        if (!spectra_interlace(*ex, *ey, why)) {
            ++violations;
            lines.push_back(why + " for collinear config" + describe(config));
        }
    }
    if (violations == 0)
        lines.push_back("X and Y Type-I candidate slopes strictly interlace for all 50 "
                        "positive-axis configurations");
    return violations == 0 ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 8

Verdict conjecture_scan_criterion(Lines& lines) {
    ScanOptions options;
    options.trials = 1000;
    options.max_order = 5;
    options.seed = 808;
    ScanReport report = conjecture_scan(options);
    lines.push_back(std::to_string(report.gamma_trials) + " gamma layers, " +
                    std::to_string(report.gamma_distinct) + " with distinct positive roots; " +
                    std::to_string(report.configuration_checks) + " configuration spectra, " +
                    std::to_string(report.configurations_distinct) + " distinct");
    for (const auto& ce : report.counterexamples) {
        std::ostringstream gamma;
        for (const auto& gv : ce.gamma) gamma << " " << format_rational(gv);
        lines.push_back("counterexample: trial " + std::to_string(ce.trial) + " order " +
                        std::to_string(ce.order) + " gamma" + gamma.str() + " (" + ce.note +
                        ")");
    }
    for (const auto& f : report.configuration_findings)
        lines.push_back("shared spectrum slope in configuration trial " +
                        std::to_string(f.trial));
    bool ok = report.counterexamples.empty() && report.configuration_findings.empty();
    return ok ? Verdict::Pass : Verdict::Fail;
}

// ---------------------------------------------------------------- criterion 9

Verdict product_method(Lines& lines) {
    bool others_ok = true;

    ChargeConfiguration single = ChargeConfiguration::validated(
        {{Rational(3, 2), Rational(1, 4), Rational(-1, 3)}});
    ContainmentReport m1 = containment_check(single, Component::X, 10, 909);
    bool m1_ok = m1.found == 10 && m1.max_relative <= 1e-12;
    lines.push_back(std::string("M=1 containment: max relative ") + fmt(m1.max_relative) +
                    (m1_ok ? " (exact to rounding)" : " EXCEEDS 1e-12"));
    others_ok = others_ok && m1_ok;

    ChargeConfiguration dipole = ChargeConfiguration::validated(
        {{Rational(1), Rational(1), Rational(0)}, {Rational(-1), Rational(-1), Rational(0)}});
    ProductPolynomials product = product_polynomials(dipole);
    lines.push_back("chi exponents all even: verified during exact expansion");

    DegreeClaimReport degrees = degree_claim_check(dipole, product);
    bool degree_16 = degrees.measured_degree_x == 16;
    lines.push_back("dipole measured degree " + std::to_string(degrees.measured_degree_x) +
                    ", stated expectation 16, quoted bound " +
                    std::to_string(degrees.claimed_degree) + ", factor degree sum " +
                    std::to_string(degrees.factor_degree_sum));
    if (!degree_16) {
        lines.push_back("  analysis: for strengths of equal magnitude the two degree-8 "
                        "leading forms a1^2 x^2 (x^2+y^2)^3 cancel exactly, so the inner "
                        "difference drops to degree 7 and its square to 14;");
        ChargeConfiguration uneven = ChargeConfiguration::validated(
            {{Rational(2), Rational(1), Rational(0)}, {Rational(1), Rational(-1), Rational(0)}});
        DegreeClaimReport generic = degree_claim_check(uneven);
        lines.push_back("  a generic-strength pair measures degree " +
                        std::to_string(generic.measured_degree_x) +
                        ", recovering the per-term bound 16");
    }

    ContainmentReport m2 = containment_check(dipole, product, Component::X, 50, 909);
    bool m2_ok = m2.found == 50 && m2.max_relative <= 1e-6;
    lines.push_back("dipole X-zero containment: " + std::to_string(m2.found) +
                    "/50 zeros, max relative " + fmt(m2.max_relative) +
                    (m2_ok ? "" : " EXCEEDS 1e-6"));
    others_ok = others_ok && m2_ok;

    bool bound_ok = direction_count_bound(2) == 37;
    lines.push_back(std::string("direction_count_bound(2) = ") +
                    std::to_string(direction_count_bound(2)) + (bound_ok ? "" : " != 37"));
    others_ok = others_ok && bound_ok;

    bool discrepancy_reported = !degrees.claim_consistent_x && degrees.factor_degree_sum == 16;
    lines.push_back(discrepancy_reported
                        ? "degree-claim discrepancy against the quoted bound is reported"
                        : "degree-claim discrepancy NOT reported");
    others_ok = others_ok && discrepancy_reported;

    if (!others_ok) return Verdict::Fail;
    if (degree_16) {
        lines.push_back("measured degree unexpectedly equals 16: remove the expected-fail "
                        "marking");
        return Verdict::Fail;
    }
    lines.push_back("degree sub-check fails as documented (14 != 16); everything else passes");
    return Verdict::ExpectedFail;
}

// --------------------------------------------------------------- criterion 10

Verdict variant_instrumentation(Lines& lines) {
    DeterministicRng rng(1010);
    unsigned reports = 0, order_zero = 0, closed_real_diverges = 0;
    unsigned remark_breaks = 0, order_zero_breaks = 0;
    std::vector<unsigned> orders;
    for (unsigned trial = 0; trial < 100; ++trial) {
        ChargeConfiguration config =
            trial == 0 ? ChargeConfiguration::validated({{Rational(1), Rational(0), Rational(0)}})
                       : random_config_mixed(rng, 4);
        orders.push_back(moment_order(config).order);
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                VariantComparisonReport vc = variant_comparison(config, component, domain);
                ++reports;
                if (!vc.remark_matches_authoritative) {
                    ++remark_breaks;
                    lines.push_back("remark variant diverges for config" + describe(config));
                }
                if (vc.order == 0) {
                    ++order_zero;
                    bool exact = vc.closed_roots_match_real &&
                                 vc.closed_is_slope_shift.value_or(false);
                    if (!exact) {
                        ++order_zero_breaks;
                        lines.push_back("order-0 closed variant not an exact slope shift "
                                        "for config" + describe(config));
                    }
                }
                if (!vc.closed_roots_match_real) ++closed_real_diverges;
            }
        }
    }
    lines.push_back(std::to_string(reports) + " comparison reports; " +
                    std::to_string(order_zero) + " at order 0 all exact; closed variant "
                    "changes the nonzero real root set in " +
                    std::to_string(closed_real_diverges) + " reports");
    lines.push_back(order_histogram(orders));
    bool ok = remark_breaks == 0 && order_zero_breaks == 0 && order_zero > 0;
    return ok ? Verdict::Pass : Verdict::Fail;
}

// --------------------------------------------------------------- criterion 11

Verdict harmonic_demo_criterion(Lines& lines) {
    HarmonicDemoReport g17 = harmonic_demo(5, 3, 4, 0.5, 17);
    HarmonicDemoReport g33 = harmonic_demo(5, 3, 4, 0.5, 33);
    HarmonicDemoReport g65 = harmonic_demo(5, 3, 4, 0.5, 65);
    double r1 = g17.max_laplacian_residual / g33.max_laplacian_residual;
    double r2 = g33.max_laplacian_residual / g65.max_laplacian_residual;
    bool order_two = r1 > 3.0 && r1 < 5.0 && r2 > 3.0 && r2 < 5.0;
    lines.push_back("(5,3,4) residuals " + fmt(g17.max_laplacian_residual) + " -> " +
                    fmt(g33.max_laplacian_residual) + " -> " + fmt(g65.max_laplacian_residual) +
                    ", refinement ratios " + fmt(r1) + ", " + fmt(r2));
    bool hessian_ok = g17.max_hessian_determinant <= 1e-8 &&
                      g33.max_hessian_determinant <= 1e-8;
    lines.push_back("plane Hessian determinant residual " +
                    fmt(g33.max_hessian_determinant) + (hessian_ok ? "" : " EXCEEDS 1e-8"));
    bool plane_ok = g17.max_plane_z_derivative == 0.0;
    HarmonicDemoReport off = harmonic_demo(1, 1, 1, 0.5, 17);
    bool off_ok = !off.coefficients_harmonic && off.max_laplacian_residual >= 0.5;
    lines.push_back("(1,1,1) residual " + fmt(off.max_laplacian_residual) +
                    (off_ok ? " (non-harmonic, bounded below)" : " NOT bounded below by 0.5"));
    bool ok = g17.coefficients_harmonic && order_two && hessian_ok && plane_ok && off_ok;
    return ok ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

int main() {
    // Time limits follow the stated budgets: 5 s for the kernel oracle, 60 s
    // for the series comparison, 60 s per traced configuration (20 configs),
    // 120 s for the conjecture scans.
    std::vector<Criterion> criteria{
        {1, "kernel recurrence vs derivative oracle", kernel_oracle, 5000},
        {2, "kernel cross-family identity", kernel_identity},
        {3, "kernel root interlacing", kernel_interlacing},
        {4, "series vs closed form", series_vs_closed, 60000},
        {5, "root-count bound 2L+1", root_count_bound},
        {6, "tracer cross-validation", tracer_cross_validation, 20 * 60000LL},
        {7, "collinear special-case interlacing", collinear_interlacing},
        {8, "conjecture scans", conjecture_scan_criterion, 120000},
        {9, "product method", product_method},
        {10, "variant comparison instrumentation", variant_instrumentation},
        {11, "harmonic demo", harmonic_demo_criterion},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Lines lines;
        Verdict verdict = Verdict::Fail;
        auto start = std::chrono::steady_clock::now();
        try {
            verdict = criterion.run(lines);
        } catch (const std::exception& e) {
            lines.push_back(std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (criterion.time_limit_ms > 0 && ms > criterion.time_limit_ms &&
            verdict != Verdict::Fail) {
            verdict = Verdict::Fail;
            lines.push_back("wall-clock budget exceeded: " + std::to_string(ms) +
                            " ms > " + std::to_string(criterion.time_limit_ms) + " ms");
        }
        const char* label = verdict == Verdict::Pass          ? "PASS"
                            : verdict == Verdict::ExpectedFail ? "FAIL (expected)"
                                                               : "FAIL";
        std::cout << "CRITERION " << criterion.number << " (" << criterion.title
                  << "): " << label << " (" << ms << " ms)\n";
        for (const auto& line : lines) std::cout << "    " << line << "\n";
        if (verdict == Verdict::Fail) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all criteria in their expected state\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
