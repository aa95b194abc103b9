// Minimal library walkthrough: build a two-charge configuration, print the
// exact candidate asymptotic slopes of {X = 0} and {Y = 0}, and compare the
// closed forms against the truncated Laurent series at a sample slope.
#include <fieldasym/directions.hpp>

#include <iostream>

using namespace fieldasym;

int main() {
    ChargeConfiguration dipole = ChargeConfiguration::validated({
        {Rational(1), Rational(1), Rational(0)},
        {Rational(-1), Rational(-1), Rational(0)},
    });

    DirectionSpectrum s = spectrum(dipole);
    std::cout << "moment order: " << s.order << "\n";
    for (const auto& entry : s.entries) {
        std::cout << to_string(entry.component) << "/" << to_string(entry.domain)
                  << "  numerator = " << entry.polynomial.form.numerator.to_string("t") << "\n";
        if (entry.zero_is_root) std::cout << "    slope 0\n";
        for (const auto& root : entry.roots)
            std::cout << "    slope ~ " << root.midpoint_double() << "   in ["
                      << format_rational(root.lo) << ", " << format_rational(root.hi) << "]\n";
    }

    const double t = 0.25;
    DirectionPolynomial form = zeroing_form(dipole, Component::X, Domain::TypeI,
                                            Variant::Authoritative);
    std::cout << "closed form at t=" << t << ": " << form.form.eval_double(t) << "\n";
    std::cout << "series      at t=" << t << ": "
              << series_eval(dipole, Component::X, Domain::TypeI, t) << "\n";
    return 0;
}
