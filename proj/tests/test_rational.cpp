#include <doctest.h>

#include "oracles.hpp"
#include "qrpat/rational.hpp"

using namespace qrpat;

TEST_CASE("rationals stay reduced with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("mod reductions") {
    CHECK(Rational(10 * 20171, 9).mod(20171) == Rational(20171, 9));
    CHECK(Rational(-1, 3).mod(5) == Rational(14, 3));
    CHECK(Rational(7, 3).frac() == Rational(1, 3));
    CHECK(Rational(-1, 4).frac() == Rational(3, 4));
}

TEST_CASE("overflow is reported, not wrapped") {
    const Rational huge(Wide{1} << 120);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("q_congruent") {
    const Modulus five(5);
    CHECK(q_congruent(Rational(7, 3), Rational(7, 3), five));
    const Modulus m(20171);
    CHECK(q_congruent(Rational(80684, 9), Rational(80684, 9) + Rational(20171), m));
    CHECK_FALSE(q_congruent(Rational(1, 2), Rational(1, 3), Modulus(7)));
}

TEST_CASE("q_congruent is an equivalence relation") {
    oracle::Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        const Modulus m(rng.uniform(2, 50));
        const std::int64_t den = rng.uniform(1, 12);
        // Triples sharing a denominator, often in the same class.
        const Rational s(rng.uniform(-200, 200), den);
        const Rational t1 = s + Rational(m.value() * rng.uniform(-3, 3));
        const Rational t2 = rng.uniform(0, 1) ? t1 + Rational(m.value() * rng.uniform(-3, 3))
                                              : Rational(rng.uniform(-200, 200), den);
        CHECK(q_congruent(s, s, m));
        CHECK(q_congruent(s, t1, m) == q_congruent(t1, s, m));
        if (q_congruent(s, t1, m) && q_congruent(t1, t2, m)) CHECK(q_congruent(s, t2, m));
    }
}

TEST_CASE("congruent integers are Q-congruent") {
    oracle::Rng rng(4);
    for (int t = 0; t < 500; ++t) {
        const std::int64_t mod = rng.uniform(2, 1000);
        const std::int64_t u = rng.uniform(-100000, 100000);
        const std::int64_t v = u + mod * rng.uniform(-50, 50);
        CHECK(q_congruent(Rational(u), Rational(v), Modulus(mod)));
    }
}
