#include <catch2/catch_amalgamated.hpp>

#include <fieldasym/directions.hpp>

using namespace fieldasym;

namespace {

ChargeConfiguration dipole() {
    return ChargeConfiguration::validated(
        {{Rational(1), Rational(1), Rational(0)}, {Rational(-1), Rational(-1), Rational(0)}});
}

ChargeConfiguration diagonal_pair() {
    return ChargeConfiguration::validated(
        {{Rational(1), Rational(1), Rational(1)}, {Rational(-1), Rational(-1), Rational(-1)}});
}

ChargeConfiguration monopole() {
    return ChargeConfiguration::validated({{Rational(1), Rational(0), Rational(0)}});
}

}  // namespace

TEST_CASE("component-kernel pairing swaps with the chart") {
    CHECK(component_kernel(Component::X, Domain::TypeI) == KernelKind::Odd);
    CHECK(component_kernel(Component::Y, Domain::TypeI) == KernelKind::Even);
    CHECK(component_kernel(Component::X, Domain::TypeII) == KernelKind::Even);
    CHECK(component_kernel(Component::Y, Domain::TypeII) == KernelKind::Odd);
}

TEST_CASE("direction coefficients read the moment layer with alternating signs") {
    DirectionCoefficients one = direction_coefficients(dipole(), Domain::TypeI);
    CHECK(one.order == 1);
    REQUIRE(one.values.size() == 2);
    CHECK(one.values[0] == Rational(0));   // + m_{0,1}
    CHECK(one.values[1] == Rational(-2));  // - m_{1,0}

    DirectionCoefficients two = direction_coefficients(dipole(), Domain::TypeII);
    CHECK(two.values[0] == Rational(-2));  // - m_{1,0}
    CHECK(two.values[1] == Rational(0));   // + m_{0,1}

    DirectionCoefficients diag = direction_coefficients(diagonal_pair(), Domain::TypeI);
    CHECK(diag.values[0] == Rational(2));
    CHECK(diag.values[1] == Rational(-2));

    // A charge sitting at the origin contributes through 0^0 = 1.
    DirectionCoefficients zero = direction_coefficients(monopole(), Domain::TypeI);
    CHECK(zero.order == 0);
    CHECK(zero.values == std::vector<Rational>{Rational(1)});
}

TEST_CASE("the two TypeII conventions differ by the sign (-1)^order only") {
    for (const ChargeConfiguration& config : {dipole(), diagonal_pair(), monopole()}) {
        DirectionCoefficients na =
            direction_coefficients(config, Domain::TypeII, TypeTwoConvention::NegatedAbscissa);
        DirectionCoefficients no =
            direction_coefficients(config, Domain::TypeII, TypeTwoConvention::NegatedOrdinate);
        Rational sign = na.order % 2 == 0 ? Rational(1) : Rational(-1);
        REQUIRE(na.values.size() == no.values.size());
        for (std::size_t l = 0; l < na.values.size(); ++l)
            CHECK(no.values[l] == sign * na.values[l]);
        for (Component component : {Component::X, Component::Y}) {
            DirectionPolynomial a = zeroing_form(config, component, Domain::TypeII,
                                                 Variant::Authoritative,
                                                 TypeTwoConvention::NegatedAbscissa);
            DirectionPolynomial b = zeroing_form(config, component, Domain::TypeII,
                                                 Variant::Authoritative,
                                                 TypeTwoConvention::NegatedOrdinate);
            CHECK(proportional(a.form.numerator, b.form.numerator));
        }
    }
}

TEST_CASE("order-zero forms reduce to the bare kernels") {
    DirectionPolynomial x1 = zeroing_form(monopole(), Component::X, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(x1.form.numerator == UniPoly{Rational(0), Rational(1)});
    CHECK(x1.form.half_exponent == 3);
    CHECK(x1.zero_is_root());

    DirectionPolynomial y1 = zeroing_form(monopole(), Component::Y, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(y1.form.numerator == UniPoly{Rational(1)});
    CHECK_FALSE(y1.zero_is_root());

    DirectionPolynomial closed = zeroing_form(monopole(), Component::X, Domain::TypeI,
                                              Variant::Closed);
    CHECK(closed.form.numerator == UniPoly{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("dipole direction polynomials match the worked expansion") {
    DirectionPolynomial xi = zeroing_form(dipole(), Component::X, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(xi.order == 1);
    CHECK(xi.form.numerator == UniPoly{Rational(-2), Rational(0), Rational(4)});
    CHECK(xi.form.half_exponent == 5);
    CHECK_FALSE(xi.zero_is_root());

    DirectionPolynomial yi = zeroing_form(dipole(), Component::Y, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(yi.form.numerator == UniPoly{Rational(0), Rational(6)});
    CHECK(yi.zero_is_root());

    DirectionPolynomial xii = zeroing_form(dipole(), Component::X, Domain::TypeII,
                                           Variant::Authoritative);
    CHECK(xii.form.numerator == UniPoly{Rational(-4), Rational(0), Rational(2)});

    DirectionPolynomial yii = zeroing_form(dipole(), Component::Y, Domain::TypeII,
                                           Variant::Authoritative);
    CHECK(yii.form.numerator == UniPoly{Rational(0), Rational(-6)});
}

TEST_CASE("diagonal pair exercises both coefficient terms at once") {
    DirectionPolynomial xi = zeroing_form(diagonal_pair(), Component::X, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(xi.form.numerator ==
          UniPoly{Rational(-2), Rational(6), Rational(4)});  // 4t^2 + 6t - 2
    DirectionPolynomial yi = zeroing_form(diagonal_pair(), Component::Y, Domain::TypeI,
                                          Variant::Authoritative);
    CHECK(yi.form.numerator == UniPoly{Rational(4), Rational(6), Rational(-2)});
    DirectionPolynomial xii = zeroing_form(diagonal_pair(), Component::X, Domain::TypeII,
                                           Variant::Authoritative);
    CHECK(xii.form.numerator == UniPoly{Rational(-4), Rational(-6), Rational(2)});
    DirectionPolynomial yii = zeroing_form(diagonal_pair(), Component::Y, Domain::TypeII,
                                           Variant::Authoritative);
    CHECK(yii.form.numerator == UniPoly{Rational(2), Rational(-6), Rational(-4)});
}

TEST_CASE("unit interval roots strip slope zero and the chart boundary") {
    // t (2t - 1)(t^2 - 1): of the roots {0, 1/2, 1, -1} only 1/2 counts.
    UniPoly p = UniPoly{Rational(0), Rational(1)} * UniPoly{Rational(-1), Rational(2)} *
                UniPoly{Rational(-1), Rational(0), Rational(1)};
    auto roots = unit_interval_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].contains(Rational(1, 2)));
    CHECK(roots[0].width() <= Rational(1, int_pow(Int(10), 12)));

    auto pair = unit_interval_roots(UniPoly{Rational(-2), Rational(0), Rational(4)});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].midpoint_double() == Catch::Approx(-0.7071067811).margin(1e-9));
    CHECK(pair[1].midpoint_double() == Catch::Approx(0.7071067811).margin(1e-9));

    CHECK(unit_interval_roots(UniPoly{Rational(1)}).empty());
    CHECK(unit_interval_roots(UniPoly()).empty());
    // 2t^2 - 4 keeps both roots outside the unit interval.
    CHECK(unit_interval_roots(UniPoly{Rational(-4), Rational(0), Rational(2)}).empty());
}

TEST_CASE("spectrum collects roots, bounds and distinctness") {
    DirectionSpectrum s = spectrum(dipole());
    CHECK(s.order == 1);
    REQUIRE(s.entries.size() == 4);
    for (const auto& e : s.entries) {
        CHECK(e.root_bound == 3);
        CHECK(e.within_bound);
        CHECK(e.roots.size() + (e.zero_is_root ? 1 : 0) <= e.root_bound);
    }
    // X/TypeI: slopes +-1/sqrt(2); Y/TypeI: only slope 0.
    CHECK(s.entries[0].roots.size() == 2);
    CHECK(s.entries[1].roots.empty());
    CHECK(s.entries[1].zero_is_root);
    // X/TypeII: both roots of 2t^2-4 fall outside the unit interval.
    CHECK(s.entries[2].roots.empty());
    CHECK_FALSE(s.entries[2].zero_is_root);

    REQUIRE(s.distinctness.size() == 2);
    for (const auto& d : s.distinctness) {
        CHECK(d.squarefree_resultant != 0);
        CHECK(d.distinct_everywhere);
        CHECK(d.distinct_in_unit);
        CHECK_FALSE(d.zero_shared);
        CHECK(d.shared_unit_roots.empty());
    }
}

TEST_CASE("spectrum root counts for the diagonal pair") {
    DirectionSpectrum s = spectrum(diagonal_pair());
    REQUIRE(s.entries.size() == 4);
    std::vector<double> expected{0.280776406404, -0.561552812809, -0.561552812809,
                                 0.280776406404};
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(s.entries[i].roots.size() == 1);
        CHECK(s.entries[i].roots[0].midpoint_double() ==
              Catch::Approx(expected[i]).margin(1e-9));
    }
}

TEST_CASE("series evaluation agrees with the closed forms") {
    for (const ChargeConfiguration& config : {dipole(), diagonal_pair(), monopole()}) {
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                DirectionPolynomial form =
                    zeroing_form(config, component, domain, Variant::Authoritative);
                for (double t : {-0.75, -0.31, 0.25, 0.66}) {
                    double closed = form.form.eval_double(t);
                    double series = series_eval(config, component, domain, t);
                    CHECK(series == Catch::Approx(closed).epsilon(1e-9).margin(1e-9));
                }
            }
        }
    }
}

TEST_CASE("series evaluation at slope zero uses the exact low part") {
    CHECK(series_eval(dipole(), Component::X, Domain::TypeI, 0.0) == -2.0);
    CHECK(series_eval(dipole(), Component::Y, Domain::TypeI, 0.0) == 0.0);
    CHECK(series_eval(monopole(), Component::X, Domain::TypeI, 0.0) == 0.0);
    CHECK(series_eval(monopole(), Component::Y, Domain::TypeI, 0.0) == 1.0);
}

TEST_CASE("series evaluation rejects slopes outside the chart") {
    CHECK_THROWS_AS(series_eval(dipole(), Component::X, Domain::TypeI, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(series_eval(dipole(), Component::X, Domain::TypeI, -1.5),
                    std::domain_error);
    CHECK_THROWS_AS(series_eval(dipole(), Component::X, Domain::TypeI, 0.5, 0),
                    std::invalid_argument);
}

TEST_CASE("variant comparison: remark always equals authoritative") {
    for (const ChargeConfiguration& config : {dipole(), diagonal_pair(), monopole()}) {
        for (Component component : {Component::X, Component::Y}) {
            for (Domain domain : {Domain::TypeI, Domain::TypeII}) {
                VariantComparisonReport r = variant_comparison(config, component, domain);
                CHECK(r.remark_matches_authoritative);
            }
        }
    }
}

TEST_CASE("variant comparison: closed form is a slope shift at order zero") {
    VariantComparisonReport r = variant_comparison(monopole(), Component::X, Domain::TypeI);
    REQUIRE(r.closed_is_slope_shift.has_value());
    CHECK(*r.closed_is_slope_shift);
    CHECK(r.closed_roots_match_real);
}

TEST_CASE("variant comparison: closed form drifts once two terms mix") {
    // Single active coefficient: dropping t^-(l+1) rescales by a power of t.
    VariantComparisonReport single = variant_comparison(dipole(), Component::X, Domain::TypeI);
    CHECK_FALSE(single.closed_is_slope_shift.has_value());
    CHECK(single.closed_roots_match_real);

    // Two active coefficients: the omitted factors differ between terms and
    // the root sets genuinely separate.
    VariantComparisonReport mixed =
        variant_comparison(diagonal_pair(), Component::X, Domain::TypeI);
    CHECK_FALSE(mixed.closed_roots_match_real);
    CHECK_FALSE(mixed.closed_roots_match_complex);
    CHECK(mixed.details.find("differ") != std::string::npos);
}

TEST_CASE("degenerate coefficient layers are rejected") {
    CHECK_THROWS_AS(combine_direction_terms({}, KernelKind::Odd, Variant::Authoritative),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        combine_direction_terms({Rational(0), Rational(0)}, KernelKind::Odd,
                                Variant::Authoritative),
        std::logic_error);
}
