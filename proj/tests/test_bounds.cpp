#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arakelov/bounds.hpp"
#include "arakelov/numtheory.hpp"

using namespace arakelov;

TEST_CASE("compute_bp examples") {
    CHECK(compute_bp({2, 1, 1, 1}) == Rational(1));
    // Fermat worst case at p=5: inner sums 1, 6, 31.
    CHECK(compute_bp({9, 5, 1, 3}) == Rational(29015));
    CHECK(Rational(29015) <= Rational(78125, 2));
    // X0(35) above 5: inner sums 1, 3, 7; (1 + 9 + 49 + 2*49) * 2.
    CHECK(compute_bp({6, 2, 1, 3}) == Rational(314));
}

TEST_CASE("compute_bp rejects degenerate statistics") {
    CHECK_THROWS_AS(compute_bp({1, 1, 1, 1}), DegenerateStats);
    CHECK_THROWS_AS(compute_bp({3, 1, 1, 3}), DegenerateStats);  // c > r - 1
    CHECK_THROWS_AS(compute_bp({4, 1, 2, 1}), DegenerateStats);  // l > u
}

TEST_CASE("compute_bp monotonicity grid") {
    for (long long u = 1; u <= 10; ++u)
        for (long long l = 1; l <= u; ++l)
            for (long long r = 2; r <= 20; r += 3)
                for (long long c = 1; c <= r - 1; ++c) {
                    const Rational base = compute_bp({r, u, l, c});
                    CHECK(compute_bp({r + 1, u, l, c}) >= base);
                    CHECK(compute_bp({r, u + 1, l, c}) >= base);
                    if (c + 1 <= r - 1)
                        CHECK(compute_bp({r, u, l, c + 1}) >= base);
                    if (l > 1) CHECK(compute_bp({r, u, l - 1, c}) >= base);
                }
}

TEST_CASE("X(N) closed form: (r-1)^2 m / s from (r, (r-1)ms, s, 1)") {
    for (long long r = 2; r <= 12; ++r)
        for (long long m = 1; m <= 5; ++m)
            for (long long s = 1; s <= 7; s += 2)
                CHECK(compute_bp({r, (r - 1) * m * s, s, 1}) ==
                      Rational((r - 1) * (r - 1) * m, s));
}

TEST_CASE("Fermat worst case stays below p^7/2 for primes 5..31") {
    // The chain b_p <= ... <= p^7/2 holds at every prime in range;
    // computing the formula at r = 4 + p(p-3)/2 confirms it directly (the
    // p=7 value is 341600 against 411771.5).
    for (long long p = 5; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        const long long r = 4 + p * (p - 3) / 2;
        const Rational bp = compute_bp({r, p, 1, 3});
        long long p7 = 1;
        for (int i = 0; i < 7; ++i) p7 *= p;
        CHECK(bp <= Rational(p7, 2));
    }
    CHECK(compute_bp({18, 7, 1, 3}) == Rational(341600));
}

TEST_CASE("ap_upper_bound") {
    CHECK(ap_upper_bound(3, Rational(314), false) == Rational(1884));
    CHECK(ap_upper_bound(6, Rational(29015), true) == Rational(58030));
    CHECK(Rational(-1, 16) <= ap_upper_bound(3, Rational(314), false));
}

namespace {

AnalyticInputs x0n35_inputs() {
    AnalyticInputs in;
    in.genus = 3;
    in.degree = 48;
    in.field_degree = 1;
    in.deg_L = 1;
    in.cusps = {{"e1", 35, 1}, {"e5", 7, 1}, {"e7", 5, 1}, {"e35", 1, 1}};
    return in;
}

}  // namespace

TEST_CASE("jk integral bound") {
    SUBCASE("all widths 1 leaves only the kappa term") {
        AnalyticInputs in;
        in.genus = 2;
        in.degree = 3;
        in.cusps = {{"a", 1, 1}, {"b", 1, 1}, {"c", 1, 1}};
        const BoundExpression e = jk_integral_bound(in);
        CHECK(e.terms().size() == 1);
        CHECK(e.coefficient(Atom::sym("kappa")) == Rational(3, 2));
    }
    SUBCASE("X0(35) data") {
        const BoundExpression e = jk_integral_bound(x0n35_inputs());
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 35)) ==
              Rational(4 * 35, 3));
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 7)) ==
              Rational(28, 3));
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 5)) ==
              Rational(20, 3));
        CHECK(e.coefficient(Atom::sym("kappa")) == Rational(16));
    }
    SUBCASE("single cusp of width N") {
        AnalyticInputs in;
        in.genus = 2;
        in.degree = 12;
        in.cusps = {{"wide", 12, 1}};
        const BoundExpression e = jk_integral_bound(in);
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 12)) == Rational(24));
        CHECK(e.coefficient(Atom::sym("kappa")) == Rational(6));
    }
}

TEST_CASE("analytic b_beta bound") {
    SUBCASE("all widths 1 with vanishing L^2") {
        AnalyticInputs in;
        in.genus = 2;
        in.degree = 2;
        in.field_degree = 3;
        in.cusps = {{"a", 1, 1}, {"b", 1, 1}};
        const BoundExpression e = analytic_bbeta_bound(in);
        CHECK(e.terms().size() == 1);
        CHECK(e.coefficient(Atom::sym("kappa")) == Rational(6));
    }
    SUBCASE("X0(35) with symbolic L^2") {
        AnalyticInputs in = x0n35_inputs();
        in.L_self_intersection.add_term(Atom::sym("Lsq"), Rational(1));
        const BoundExpression e = analytic_bbeta_bound(in);
        CHECK(e.coefficient(Atom::sym("Lsq")) == Rational(-1, 8));
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 35)) ==
              Rational(8 * 35, 48));
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 7)) ==
              Rational(7, 6));
        CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 5)) ==
              Rational(5, 6));
        CHECK(e.coefficient(Atom::sym("kappa")) == Rational(2));
    }
    SUBCASE("simplified form expands log b_max") {
        const BoundExpression e = analytic_bbeta_simplified(x0n35_inputs());
        CHECK(e.coefficient(Atom::sym_log("kappa1", 5)) == Rational(1));
        CHECK(e.coefficient(Atom::sym_log("kappa1", 7)) == Rational(1));
        CHECK(e.coefficient(Atom::sym("kappa2")) == Rational(1));
        CHECK(e.terms().size() == 3);
    }
}

TEST_CASE("spectral c bound") {
    CHECK(spectral_c_bound(4.0, 0.25, false) == doctest::Approx(0.125));
    CHECK(spectral_c_bound(1.0, 1.0, true) == doctest::Approx(8.0));
    CHECK(spectral_c_bound(4.0, 0.25, true) == doctest::Approx(2.0));
    CHECK_THROWS_AS(spectral_c_bound(0.0, 1.0, false), NonPositiveLambda);
    // Two-point anchor: exact c = 1/16 sits below (2/lambda1)||f||^2 = 1/8
    // with slack factor 2.
    CHECK(Rational(1, 16).to_double() <= spectral_c_bound(4.0, 0.25, false));
}

TEST_CASE("omega total bound") {
    SUBCASE("trivial assembly") {
        const BoundExpression e = omega_total_bound(
            true, 1, 2, BoundExpression(), FormalLogSum(), true);
        CHECK(e.terms().size() == 1);
        CHECK(e.coefficient(Atom::sym("logDisc")) == Rational(4));
    }
    SUBCASE("Manin-Drinfeld must be asserted") {
        CHECK_THROWS_AS(omega_total_bound(true, 1, 2, BoundExpression(),
                                          FormalLogSum(), false),
                        ManinDrinfeldNotAsserted);
    }
    SUBCASE("linearity in both arguments") {
        BoundExpression a1;
        a1.add_term(Atom::sym("kappa"), Rational(2));
        BoundExpression a2;
        a2.add_term(Atom::sym_log("kappa0*pi", 5), Rational(1, 3));
        FormalLogSum g1;
        g1.add_term(5, Rational(-1, 16));
        FormalLogSum g2;
        g2.add_term(7, Rational(2, 3));

        const BoundExpression both =
            omega_total_bound(false, 1, 4, a1 + a2, g1 + g2, true);
        BoundExpression split = omega_total_bound(false, 1, 4, a1, g1, true);
        split += omega_total_bound(false, 1, 4, a2, g2, true);
        CHECK(both == split);
    }
}

TEST_CASE("x0n leading term") {
    const BoundExpression e = x0n_leading_term(3, 35);
    CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 5)) == Rational(48));
    CHECK(e.coefficient(Atom::sym_log("kappa0*pi", 7)) == Rational(48));
    CHECK(e.coefficient(Atom::log(5)) == Rational(-3));
    CHECK(e.coefficient(Atom::log(7)) == Rational(-3));
    CHECK(e.terms().size() == 4);

    const double expected =
        (16.0 * std::numbers::pi - 1.0) * 3.0 * std::log(35.0);
    CHECK(e.eval({{"kappa0", 1.0}}) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(x0n_leading_term(3, 36), InvalidCurveParameter);
    CHECK_THROWS_AS(x0n_leading_term(3, 25), InvalidCurveParameter);
    CHECK_THROWS_AS(x0n_leading_term(3, 55 * 3), InvalidCurveParameter);
}
