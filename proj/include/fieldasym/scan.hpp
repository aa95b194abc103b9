#pragma once

#include "sigma.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace fieldasym {

/// splitmix64: tiny, fully specified, identical on every platform.  All
/// randomized drivers in the project draw from this generator so that a seed
/// pins their behavior bit for bit.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Numerator in [-cap, cap], denominator in [1, denominator_cap].
inline Rational random_rational(DeterministicRng& rng, long long cap,
                                long long denominator_cap) {
    return Rational(Int(rng.int_in(-cap, cap)), Int(rng.int_in(1, denominator_cap)));
}

/// Random nontrivial configuration with 1..max_charges charges, coordinates
/// in [-2, 2] and distinct positions.
inline ChargeConfiguration random_configuration(DeterministicRng& rng, unsigned max_charges,
                                                long long strength_cap,
                                                long long denominator_cap) {
    while (true) {
        unsigned m = 1 + static_cast<unsigned>(rng.below(max_charges));
        std::vector<Charge> charges;
        charges.reserve(m);
        for (unsigned j = 0; j < m; ++j) {
            Charge c;
            c.strength = random_rational(rng, strength_cap, denominator_cap);
            long long dx = rng.int_in(1, denominator_cap);
            long long dy = rng.int_in(1, denominator_cap);
            c.x = Rational(Int(rng.int_in(-2 * dx, 2 * dx)), Int(dx));
            c.y = Rational(Int(rng.int_in(-2 * dy, 2 * dy)), Int(dy));
            charges.push_back(std::move(c));
        }
        try {
            return ChargeConfiguration::validated(std::move(charges));
        } catch (const ConfigError&) {
            continue;  // coincident positions or all-zero strengths: redraw
        }
    }
}

struct ScanOptions {
    unsigned max_order = 5;
    unsigned trials = 1000;
    std::uint64_t seed = 0;
    long long coefficient_cap = 20;
    long long denominator_cap = 20;
    unsigned configuration_trials = 0;  ///< 0 = trials/10, at least 1
};

struct ScanCounterexample {
    unsigned trial = 0;
    unsigned order = 0;
    std::vector<Rational> gamma;
    std::string note;
};

struct ScanConfigurationFinding {
    unsigned trial = 0;
    std::vector<Charge> charges;
    Domain domain = Domain::TypeI;
};

struct ScanReport {
    ScanOptions options;
    unsigned gamma_trials = 0;
    unsigned gamma_distinct = 0;
    std::vector<ScanCounterexample> counterexamples;
    unsigned configuration_checks = 0;
    unsigned configurations_distinct = 0;
    std::vector<ScanConfigurationFinding> configuration_findings;

    /// Deterministic plain-text rendering; no timing, no addresses.
    std::string render() const {
        std::ostringstream out;
        out << "conjecture scan: seed=" << options.seed << " trials=" << options.trials
            << " max-order=" << options.max_order
            << " coefficient-cap=" << options.coefficient_cap << "\n";
        out << "gamma layers checked: " << gamma_trials << "; distinct positive roots: "
            << gamma_distinct << "; counterexamples: " << counterexamples.size() << "\n";
        for (const auto& ce : counterexamples) {
            out << "  counterexample trial=" << ce.trial << " order=" << ce.order << " gamma=[";
            for (std::size_t i = 0; i < ce.gamma.size(); ++i)
                out << (i ? ", " : "") << format_rational(ce.gamma[i]);
            out << "] " << ce.note << "\n";
        }
        out << "configurations checked: " << configuration_checks
            << "; distinct spectra: " << configurations_distinct
            << "; violations: " << configuration_findings.size() << "\n";
        for (const auto& f : configuration_findings) {
            out << "  violation trial=" << f.trial << " domain=" << to_string(f.domain)
                << " charges=[";
            for (std::size_t j = 0; j < f.charges.size(); ++j) {
                const Charge& c = f.charges[j];
                out << (j ? "; " : "") << format_rational(c.strength) << " at ("
                    << format_rational(c.x) << ", " << format_rational(c.y) << ")";
            }
            out << "]\n";
        }
        return out.str();
    }
};

/// Randomized hunt for a violation of the distinct-positive-root conjecture,
/// plus spot checks that random configurations keep their X and Y candidate
/// slopes distinct.  Per-trial substream: seed xor trial index.
inline ScanReport conjecture_scan(const ScanOptions& options) {
    if (options.trials == 0) throw std::invalid_argument("empty scan: zero trials");
    ScanReport report;
    report.options = options;
    for (unsigned trial = 0; trial < options.trials; ++trial) {
        DeterministicRng rng(options.seed ^ trial);
        unsigned order = static_cast<unsigned>(rng.below(options.max_order + 1));
        std::vector<Rational> gamma(order + 1);
        bool any = false;
        while (!any) {
            for (auto& g : gamma) {
                g = random_rational(rng, options.coefficient_cap, options.denominator_cap);
                any = any || g != 0;
            }
        }
        ConjecturePolyPair pair = conjecture_poly_pair(gamma, order);
        ++report.gamma_trials;
        if (pair.distinct_positive_roots) {
            ++report.gamma_distinct;
        } else {
            ScanCounterexample ce{trial, order, gamma, ""};
            std::ostringstream note;
            note << "shared positive root in [";
            for (std::size_t i = 0; i < pair.shared_positive_roots.size(); ++i)
                note << (i ? "], [" : "") << format_rational(pair.shared_positive_roots[i].lo)
                     << ", " << format_rational(pair.shared_positive_roots[i].hi);
            note << "]";
            ce.note = note.str();
            report.counterexamples.push_back(std::move(ce));
        }
    }
    unsigned config_trials = options.configuration_trials != 0
                                 ? options.configuration_trials
                                 : std::max(1u, options.trials / 10);
    constexpr std::uint64_t kConfigStream = 0x636f6e666967ull;  // distinct substream tag
    for (unsigned trial = 0; trial < config_trials; ++trial) {
        DeterministicRng rng(options.seed ^ kConfigStream ^ trial);
        ChargeConfiguration config =
            random_configuration(rng, 3, options.coefficient_cap, options.denominator_cap);
        DirectionSpectrum s = spectrum(config);
        ++report.configuration_checks;
        bool all_distinct = true;
        for (const auto& d : s.distinctness) {
            if (!d.distinct_in_unit) {
                all_distinct = false;
                report.configuration_findings.push_back(
                    {trial, config.charges(), d.domain});
            }
        }
        if (all_distinct) ++report.configurations_distinct;
    }
    return report;
}

}  // namespace fieldasym
