#include <fieldasym/io.hpp>
#include <fieldasym/report.hpp>
#include <fieldasym/scan.hpp>
#include <fieldasym/sigma.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace fieldasym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitFlags = 4;

std::string config_stem(const std::string& path) {
    std::string stem = fs::path(path).stem().string();
    return stem.empty() ? "config" : stem;
}

void write_report(const Report& report, const fs::path& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / name);
    if (!out) throw std::runtime_error("cannot write report " + (out_dir / name).string());
    out << report.to_json().dump(2) << "\n";
}

int run_spectrum(const std::string& config_path, const fs::path& out_dir) {
    ChargeConfiguration config = load_configuration(config_path);
    MomentTable table = moment_order(config);
    DirectionSpectrum s = spectrum(config);

    Report report;
    report.command = "spectrum";
    report.input = charges_to_json(config);
    report.add(Severity::Info, "moment order " + std::to_string(table.order),
               {{"order", table.order}});
    if (table.exceeds_linear_bound)
        report.add(Severity::Finding,
                   "moment order exceeds charge count minus one",
                   {{"order", table.order}, {"charges", config.count()}});
    nlohmann::json spectrum_json = spectrum_to_json(s);
    nlohmann::json comparisons = nlohmann::json::array();
    for (const auto& e : s.entries) {
        VariantComparisonReport vc = variant_comparison(config, e.component, e.domain);
        nlohmann::json entry{{"component", to_string(vc.component)},
                             {"domain", to_string(vc.domain)},
                             {"order", vc.order},
                             {"remark_matches_authoritative", vc.remark_matches_authoritative},
                             {"closed_roots_match_real", vc.closed_roots_match_real},
                             {"closed_roots_match_complex", vc.closed_roots_match_complex},
                             {"details", vc.details}};
        if (vc.closed_is_slope_shift)
            entry["closed_is_slope_shift"] = *vc.closed_is_slope_shift;
        if (!vc.remark_matches_authoritative)
            report.add(Severity::Error, "remark variant disagrees with authoritative form",
                       entry);
        if (!vc.closed_roots_match_real)
            report.add(Severity::Finding,
                       "closed variant has a different nonzero real root set", entry);
        comparisons.push_back(std::move(entry));
    }
    for (const auto& d : s.distinctness)
        if (!d.distinct_in_unit)
            report.add(Severity::Finding,
                       std::string("shared candidate slope between X and Y in ") +
                           to_string(d.domain),
                       spectrum_json);

    fs::create_directories(out_dir);
    std::string stem = config_stem(config_path);
    std::string csv_name = stem + "_spectrum.csv";
    write_spectrum_csv((out_dir / csv_name).string(), s);
    report.artifacts.push_back(csv_name);
    nlohmann::json full{{"spectrum", spectrum_json}, {"variants", comparisons}};
    report.add(Severity::Info, "spectrum computed", full);
    std::string json_name = stem + "_spectrum.json";
    write_report(report, out_dir, json_name);

    std::cout << "order " << s.order << "\n";
    for (const auto& e : s.entries) {
        std::cout << to_string(e.component) << "/" << to_string(e.domain) << ": "
                  << e.roots.size() << " nonzero candidate slope(s)"
                  << (e.zero_is_root ? " + slope 0" : "") << ", bound " << e.root_bound
                  << (e.within_bound ? "" : " EXCEEDED") << "\n";
        for (const auto& r : e.roots) std::cout << "  " << decimal12(r.midpoint_double()) << "\n";
    }
    std::cout << "artifacts: " << (out_dir / csv_name).string() << ", "
              << (out_dir / json_name).string() << "\n";
    return report.has_errors() ? kExitInvariant : kExitOk;
}

int run_trace(const std::string& config_path, const fs::path& out_dir, const TraceParams& params,
              const std::string& component_choice, const std::string& domain_choice) {
    ChargeConfiguration config = load_configuration(config_path);
    params.validate();
    DirectionSpectrum s = spectrum(config);

    std::vector<Component> components;
    if (component_choice == "X" || component_choice == "all") components.push_back(Component::X);
    if (component_choice == "Y" || component_choice == "all") components.push_back(Component::Y);
    std::vector<Domain> domains;
    if (domain_choice == "I" || domain_choice == "all") domains.push_back(Domain::TypeI);
    if (domain_choice == "II" || domain_choice == "all") domains.push_back(Domain::TypeII);
    if (components.empty() || domains.empty())
        throw std::invalid_argument("component must be X|Y|all and domain I|II|all");

    Report report;
    report.command = "trace";
    report.input = charges_to_json(config);
    fs::create_directories(out_dir);
    std::string stem = config_stem(config_path);

    for (Component component : components) {
        for (Domain domain : domains) {
            TraceOutcome outcome = trace_and_match(config, component, domain, params, s);
            std::string tag = std::string(to_string(component)) + "_" + to_string(domain);
            std::string csv_name = stem + "_trace_" + tag + ".csv";
            std::string svg_name = stem + "_trace_" + tag + ".svg";
            write_branches_csv((out_dir / csv_name).string(), outcome.branches);
            write_trace_svg((out_dir / svg_name).string(), config, outcome.branches, s, params);
            report.artifacts.push_back(csv_name);
            report.artifacts.push_back(svg_name);

            nlohmann::json matches = nlohmann::json::array();
            for (const auto& est : outcome.matches.estimates) {
                nlohmann::json m{{"branch", est.branch_index},
                                 {"points", est.point_count},
                                 {"slope", decimal12(est.slope)},
                                 {"uncertainty", decimal12(est.uncertainty)}};
                if (est.matched_root) m["matched_root"] = decimal12(*est.matched_root);
                matches.push_back(m);
                if (!est.matched_root)
                    report.add(Severity::Finding,
                               tag + ": branch slope matches no candidate direction", m);
            }
            report.add(Severity::Info, tag + ": traced",
                       {{"branches", outcome.branches.size()},
                        {"reseeded", outcome.reseeded},
                        {"matches", matches},
                        {"notes", outcome.matches.notes}});
            std::cout << tag << ": " << outcome.branches.size() << " branch(es), "
                      << outcome.matches.estimates.size() << " matched estimate(s)"
                      << (outcome.reseeded ? " [reseeded]" : "") << "\n";
            for (const auto& est : outcome.matches.estimates) {
                std::cout << "  slope " << decimal12(est.slope);
                if (est.matched_root)
                    std::cout << " ~ candidate " << decimal12(*est.matched_root);
                else
                    std::cout << " (no candidate within tolerance)";
                std::cout << "\n";
            }
        }
    }
    std::string json_name = stem + "_trace.json";
    write_report(report, out_dir, json_name);
    std::cout << "artifacts in " << out_dir.string() << "\n";
    return report.has_errors() ? kExitInvariant : kExitOk;
}

int run_scan(const ScanOptions& options, const fs::path& out_dir) {
    ScanReport report = conjecture_scan(options);
    fs::create_directories(out_dir);
    std::string text = report.render();
    {
        std::ofstream out(out_dir / "scan_report.txt");
        if (!out) throw std::runtime_error("cannot write scan report");
        out << text;
    }
    Report json_report;
    json_report.command = "scan";
    json_report.input = {{"seed", options.seed},
                         {"trials", options.trials},
                         {"max_order", options.max_order},
                         {"coefficient_cap", options.coefficient_cap}};
    for (const auto& ce : report.counterexamples) {
        nlohmann::json gamma = nlohmann::json::array();
        for (const auto& g : ce.gamma) gamma.push_back(format_rational(g));
        json_report.add(Severity::Finding, "conjecture counterexample",
                        {{"trial", ce.trial}, {"order", ce.order}, {"gamma", gamma},
                         {"note", ce.note}});
    }
    for (const auto& f : report.configuration_findings)
        json_report.add(Severity::Finding, "configuration with shared candidate slope",
                        {{"trial", f.trial}, {"domain", to_string(f.domain)}});
    json_report.add(Severity::Info, "scan finished",
                    {{"gamma_trials", report.gamma_trials},
                     {"gamma_distinct", report.gamma_distinct},
                     {"configuration_checks", report.configuration_checks},
                     {"configurations_distinct", report.configurations_distinct}});
    json_report.artifacts.push_back("scan_report.txt");
    write_report(json_report, out_dir, "scan_report.json");
    std::cout << text;
    return kExitOk;
}

int run_product(const std::string& config_path, const fs::path& out_dir, unsigned samples,
                std::uint64_t seed) {
    ChargeConfiguration config = load_configuration(config_path);
    ProductPolynomials product = product_polynomials(config);
    DegreeClaimReport degrees = degree_claim_check(config, product);

    Report report;
    report.command = "product";
    report.input = charges_to_json(config);
    report.add(Severity::Info, "product polynomials expanded",
               {{"degree_x", product.degree_x},
                {"degree_y", product.degree_y},
                {"terms_x", product.from_x_component.terms().size()},
                {"terms_y", product.from_y_component.terms().size()}});
    nlohmann::json degree_data{{"measured_x", degrees.measured_degree_x},
                               {"measured_y", degrees.measured_degree_y},
                               {"claimed", degrees.claimed_degree},
                               {"factor_degree_sum", degrees.factor_degree_sum}};
    if (!degrees.claim_consistent_x || !degrees.claim_consistent_y)
        report.add(Severity::Finding,
                   "measured total degree exceeds the quoted degree bound", degree_data);
    else
        report.add(Severity::Info, "degree claim consistent", degree_data);

    auto [lower_x, upper_x] = harnack_bound(std::max(degrees.measured_degree_x, 1));
    report.add(Severity::Info, "component count band for the x-component curve",
               {{"lower", lower_x}, {"upper", upper_x},
                {"direction_count_bound",
                 direction_count_bound(static_cast<unsigned>(config.count()))}});

    for (Component component : {Component::X, Component::Y}) {
        ContainmentReport containment =
            containment_check(config, product, component, samples, seed);
        nlohmann::json data{{"component", to_string(component)},
                            {"requested", containment.requested},
                            {"found", containment.found},
                            {"max_relative", containment.max_relative}};
        if (containment.found < containment.requested)
            report.add(Severity::Info, "containment check found fewer zeros than requested",
                       data);
        if (containment.max_relative > 1e-6)
            // The relative measure divides by a coefficient-magnitude scale
            // that can vanish together with the polynomial when every term
            // shares a monomial factor (for example the dipole's Q carries a
            // global power of y, so on-axis zeros read as O(1) even though
            // the containment is exact).  Report, do not fail.
            report.add(Severity::Finding,
                       "relative containment measure inconclusive at sampled zeros", data);
        else
            report.add(Severity::Info,
                       std::string(to_string(component)) + " zeros lie on the product curve",
                       data);
        std::cout << to_string(component) << ": " << containment.found << "/"
                  << containment.requested << " sampled zeros, max relative value "
                  << containment.max_relative << "\n";
    }
    std::cout << "degrees: measured (" << degrees.measured_degree_x << ", "
              << degrees.measured_degree_y << "), quoted bound " << degrees.claimed_degree
              << ", factor degree sum " << degrees.factor_degree_sum << "\n";
    write_report(report, out_dir, config_stem(config_path) + "_product.json");
    return report.has_errors() ? kExitInvariant : kExitOk;
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_verify(std::uint64_t seed, unsigned n_max, const fs::path& out_dir,
               const std::string& inject_fault) {
    Report report;
    report.command = "verify";
    report.input = {{"seed", seed}, {"n_max", n_max}};
    bool all_ok = true;

    auto check = [&](const std::string& name, auto&& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string note;
        try {
            body();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        report.add(ok ? Severity::Info : Severity::Error, "check " + name,
                   {{"ok", ok}, {"ms", ms}, {"note", note}});
        std::cout << "check " << name << ": " << (ok ? "ok" : "FAILED") << " ("
                  << static_cast<long>(ms) << " ms)";
        if (!ok) std::cout << " " << note;
        std::cout << "\n";
        all_ok = all_ok && ok;
    };

    check("kernel-chain-oracle", [&] {
        for (KernelKind kind : {KernelKind::Odd, KernelKind::Even}) {
            if (!kernel_chain_matches_quotient_rule(kind, 12))
                throw CheckFailure(std::string("chain mismatch for ") + to_string(kind) +
                                   " kernel");
            for (unsigned l = 0; l <= 20; ++l) {
                int expected = static_cast<int>(kind == KernelKind::Odd ? l + 1 : l);
                if (kernel_numerator(kind, l).degree() != expected)
                    throw CheckFailure("degree drift at order " + std::to_string(l));
            }
        }
    });

    check("kernel-identity", [&] {
        for (unsigned l = 1; l <= 12; ++l) {
            bool holds = kernel_identity_holds(l);
            if (inject_fault == "kernel-identity") holds = !holds;
            if (!holds)
                throw CheckFailure("cross-family identity fails at order " + std::to_string(l));
        }
    });

    check("kernel-interlacing", [&] {
        for (unsigned l = 1; l <= 10; ++l) {
            KernelInterlacingReport r = kernel_interlacing_check(l);
            if (!r.all_real || !r.strictly_interlacing)
                throw CheckFailure("interlacing fails at order " + std::to_string(l));
        }
    });

    check("series-vs-closed", [&] {
        for (unsigned trial = 0; trial < 25; ++trial) {
            DeterministicRng rng(seed ^ trial);
            ChargeConfiguration config = random_configuration(rng, 4, 20, 20);
            for (Component component : {Component::X, Component::Y}) {
                for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                    DirectionPolynomial form =
                        zeroing_form(config, component, domain, Variant::Authoritative);
                    for (double t : {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75}) {
                        double closed = form.form.eval_double(t);
                        double series = series_eval(config, component, domain, t, n_max);
                        if (std::abs(closed - series) > 1e-9 * (1.0 + std::abs(closed)))
                            throw CheckFailure("series drift at trial " + std::to_string(trial));
                    }
                }
            }
        }
    });

    check("variant-identities", [&] {
        for (unsigned trial = 0; trial < 25; ++trial) {
            DeterministicRng rng(~seed ^ trial);
            ChargeConfiguration config = random_configuration(rng, 4, 20, 20);
            for (Component component : {Component::X, Component::Y}) {
                for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                    VariantComparisonReport vc = variant_comparison(config, component, domain);
                    if (!vc.remark_matches_authoritative)
                        throw CheckFailure("remark variant drift at trial " +
                                           std::to_string(trial));
                    if (vc.closed_is_slope_shift && !*vc.closed_is_slope_shift)
                        throw CheckFailure("closed variant shift drift at trial " +
                                           std::to_string(trial));
                }
            }
        }
    });

    check("coefficient-transport", [&] {
        for (unsigned trial = 0; trial < 25; ++trial) {
            DeterministicRng rng(seed ^ (trial + 1000));
            unsigned order = static_cast<unsigned>(rng.below(7));
            std::vector<Rational> c(order + 1);
            bool any = false;
            while (!any)
                for (auto& v : c) {
                    v = random_rational(rng, 20, 20);
                    any = any || v != 0;
                }
            SigmaForm form = sigma_conversion(c, order);
            for (KernelKind kind : {KernelKind::Odd, KernelKind::Even}) {
                HalfPowerForm lhs = combination_from_construction(c, kind, order);
                HalfPowerForm rhs = combination_from_collected(form.gamma, kind, order);
                if (!lhs.same_function_as(rhs))
                    throw CheckFailure("transport mismatch at trial " + std::to_string(trial));
            }
        }
    });

    check("product-symmetry", [&] {
        for (unsigned trial = 0; trial < 8; ++trial) {
            DeterministicRng rng(seed ^ (trial + 2000));
            ChargeConfiguration config = random_configuration(rng, 2, 5, 5);
            ProductPolynomials p = product_polynomials(config);
            std::vector<Charge> flipped = config.charges();
            for (auto& c : flipped) c.strength = -c.strength;
            ProductPolynomials q =
                product_polynomials(ChargeConfiguration::validated(std::move(flipped)));
            if (!(p.from_x_component == q.from_x_component) ||
                !(p.from_y_component == q.from_y_component))
                throw CheckFailure("sign-flip asymmetry at trial " + std::to_string(trial));
        }
    });

    check("special-case-interlacing", [&] {
        for (unsigned trial = 0; trial < 20; ++trial) {
            DeterministicRng rng(seed ^ (trial + 3000));
            unsigned m = 2 + static_cast<unsigned>(rng.below(2));
            std::vector<Charge> charges;
            for (unsigned j = 0; j < m; ++j)
                charges.push_back({Rational(0), Rational(static_cast<int>(j) + 1), Rational(0)});
            Rational sum(0);
            for (unsigned j = 0; j + 1 < m; ++j) {
                charges[j].strength = random_rational(rng, 9, 9);
                sum += charges[j].strength;
            }
            charges[m - 1].strength = trial % 2 == 0 ? random_rational(rng, 9, 9) : -sum;
            bool trivial = true;
            for (const auto& c : charges) trivial = trivial && c.strength == 0;
            if (trivial) continue;
            ChargeConfiguration config = ChargeConfiguration::validated(std::move(charges));
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                DirectionPolynomial fx =
                    zeroing_form(config, Component::X, domain, Variant::Authoritative);
                DirectionPolynomial fy =
                    zeroing_form(config, Component::Y, domain, Variant::Authoritative);
                InterlacingVerdict verdict =
                    interlacing_check(fx.form.numerator, fy.form.numerator);
                if (!verdict.strictly_interlacing)
                    throw CheckFailure("aligned-charge interlacing fails at trial " +
                                       std::to_string(trial));
            }
        }
    });

    check("harmonic-demo", [&] {
        HarmonicDemoReport coarse = harmonic_demo(5, 3, 4, 0.5, 17);
        HarmonicDemoReport fine = harmonic_demo(5, 3, 4, 0.5, 33);
        if (!coarse.coefficients_harmonic) throw CheckFailure("5^2 != 3^2 + 4^2?");
        double ratio = coarse.max_laplacian_residual / fine.max_laplacian_residual;
        if (ratio < 3.0 || ratio > 5.0)
            throw CheckFailure("residual not quadratic: ratio " + std::to_string(ratio));
        if (coarse.max_plane_z_derivative != 0.0)
            throw CheckFailure("z-derivative on the plane is not exactly zero");
        if (coarse.max_hessian_determinant > 1e-8)
            throw CheckFailure("hessian determinant above tolerance");
        HarmonicDemoReport off = harmonic_demo(1, 1, 1, 0.5, 17);
        if (off.coefficients_harmonic || off.max_laplacian_residual < 0.5)
            throw CheckFailure("non-harmonic triple not flagged");
    });

    fs::create_directories(out_dir);
    write_kernel_csv((out_dir / "kernels.csv").string(), 12);
    report.artifacts.push_back("kernels.csv");
    write_report(report, out_dir, "verify_report.json");
    std::cout << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
    return all_ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact asymptotic directions of planar point-charge fields"};
    app.require_subcommand(1);

    std::string out_dir = ".";
    app.add_option("--out", out_dir, "output directory for artifacts")->capture_default_str();

    std::string config_path;
    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "candidate asymptotic directions from the exact construction");
    cmd_spectrum->add_option("config", config_path, "charge configuration (JSON)")->required();

    auto* cmd_trace = app.add_subcommand("trace", "numerical zero-curve tracing in the far field");
    TraceParams params;
    std::string component_choice = "all";
    std::string domain_choice = "all";
    cmd_trace->add_option("config", config_path, "charge configuration (JSON)")->required();
    cmd_trace->add_option("--component", component_choice, "X, Y or all")
        ->capture_default_str();
    cmd_trace->add_option("--domain", domain_choice, "I, II or all")->capture_default_str();
    cmd_trace->add_option("--delta", params.delta, "chart opening parameter")
        ->capture_default_str();
    cmd_trace->add_option("--r-min", params.inner_radius_scale,
                          "annulus start (position-scale units)")
        ->capture_default_str();
    cmd_trace->add_option("--r-max", params.outer_radius_scale,
                          "annulus end (position-scale units)")
        ->capture_default_str();
    cmd_trace->add_option("--angular", params.angular_samples, "probes per ring")
        ->capture_default_str();
    cmd_trace->add_option("--rings", params.radial_rings, "rings across the annulus")
        ->capture_default_str();
    cmd_trace->add_option("--refine-tol", params.refine_tol, "relative residual target")
        ->capture_default_str();

    auto* cmd_scan = app.add_subcommand("scan", "randomized distinct-root conjecture scan");
    ScanOptions scan_options;
    cmd_scan->add_option("--trials", scan_options.trials, "gamma layers to draw")
        ->capture_default_str();
    cmd_scan->add_option("--L-max", scan_options.max_order, "maximum layer order")
        ->capture_default_str();
    cmd_scan->add_option("--seed", scan_options.seed, "base RNG seed")->capture_default_str();
    cmd_scan->add_option("--coeff-cap", scan_options.coefficient_cap,
                         "cap on drawn numerators")
        ->capture_default_str();
    cmd_scan->add_option("--denom-cap", scan_options.denominator_cap,
                         "cap on drawn denominators")
        ->capture_default_str();
    cmd_scan->add_option("--config-trials", scan_options.configuration_trials,
                         "random configurations to spot-check (0 = trials/10)")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "internal identity and oracle suite");
    std::uint64_t verify_seed = 0;
    unsigned n_max = 80;
    std::string inject_fault;
    cmd_verify->add_option("--seed", verify_seed, "seed for randomized checks")
        ->capture_default_str();
    cmd_verify->add_option("--n-max", n_max, "series truncation")->capture_default_str();
    cmd_verify->add_option("--inject-fault", inject_fault, "perturb a named check (self-test)")
        ->group("");

    auto* cmd_product = app.add_subcommand("product", "radical-clearing product polynomials");
    unsigned samples = 50;
    std::uint64_t product_seed = 0;
    cmd_product->add_option("config", config_path, "charge configuration (JSON)")->required();
    cmd_product->add_option("--samples", samples, "field zeros to sample")
        ->capture_default_str();
    cmd_product->add_option("--seed", product_seed, "seed for zero sampling")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitFlags;
    }

    try {
        if (cmd_spectrum->parsed()) return run_spectrum(config_path, out_dir);
        if (cmd_trace->parsed())
            return run_trace(config_path, out_dir, params, component_choice, domain_choice);
        if (cmd_scan->parsed()) return run_scan(scan_options, out_dir);
        if (cmd_verify->parsed()) return run_verify(verify_seed, n_max, out_dir, inject_fault);
        if (cmd_product->parsed()) return run_product(config_path, out_dir, samples, product_seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlags;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlags;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
