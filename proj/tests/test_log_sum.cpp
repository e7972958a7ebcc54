#include <doctest.h>

#include <cmath>
#include <random>

#include "arakelov/log_sum.hpp"

using namespace arakelov;

TEST_CASE("log-sum evaluation") {
    FormalLogSum empty;
    CHECK(empty.eval() == 0.0);

    FormalLogSum ln2;
    ln2.add_term(2, Rational(1));
    CHECK(ln2.eval() == doctest::Approx(0.6931471805599453).epsilon(1e-12));

    FormalLogSum s;
    s.add_term(5, Rational(-5, 2));
    CHECK(s.eval() == doctest::Approx(-4.023594781085251).epsilon(1e-12));
}

TEST_CASE("zero coefficients are never stored") {
    FormalLogSum s;
    s.add_term(5, Rational(1, 3));
    s.add_term(5, Rational(-1, 3));
    CHECK(s.empty());
    CHECK(s == FormalLogSum{});
    CHECK_THROWS_AS(s.add_term(1, Rational(1)), InputError);
}

TEST_CASE("composite logs expand into prime atoms") {
    const FormalLogSum s = FormalLogSum::log_integer(12);
    CHECK(s.coefficient(2) == Rational(2));
    CHECK(s.coefficient(3) == Rational(1));
    CHECK(s.coefficient(5) == Rational(0));
    CHECK(FormalLogSum::log_integer(1).empty());

    FormalLogSum direct;
    direct.add_term(2, Rational(2));
    direct.add_term(3, Rational(1));
    CHECK(s == direct);
}

TEST_CASE("addition is exact and evaluation is a homomorphism") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        FormalLogSum a, b;
        for (int i = 0; i < 5; ++i) {
            const long long atom = 2 + rng() % 30;
            a.add_term(atom, Rational(static_cast<long long>(rng() % 21) - 10,
                                      1 + rng() % 9));
            b.add_term(2 + rng() % 30,
                       Rational(static_cast<long long>(rng() % 21) - 10,
                                1 + rng() % 9));
        }
        CHECK(a + b == b + a);
        CHECK(std::abs((a + b).eval() - (a.eval() + b.eval())) < 1e-11);
        CHECK((a * Rational(3, 2)).eval() ==
              doctest::Approx(1.5 * a.eval()).epsilon(1e-12));
    }
}
