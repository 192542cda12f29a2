#include <doctest.h>

#include "qmf/qseries.hpp"
#include "test_util.hpp"

using namespace qmf;
using namespace qmf::testing;

TEST_CASE("addition with cancellation") {
    QSeries f = series(0, {1, 24});
    QSeries g = series(0, {-1, 0});
    QSeries s = f + g;
    CHECK(s.coeff(0) == Rational(0));
    CHECK(s.coeff(1) == Rational(24));
    CHECK(s.prec() == 2);
    CHECK(s.effective_order() == 1);
}

TEST_CASE("additive identity") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        QSeries f = random_series(rng, 0, 10);
        CHECK(same_common(f + QSeries::zero(10), f));
    }
}

TEST_CASE("Cauchy product of C with itself") {
    QSeries c = series(0, {1, 24, 24});
    QSeries cc = c * c;
    CHECK(cc.coeff(0) == Rational(1));
    CHECK(cc.coeff(1) == Rational(48));
    CHECK(cc.coeff(2) == Rational(624));
}

TEST_CASE("multiplicative identity") {
    std::mt19937 rng(11);
    QSeries f = random_series(rng, 2, 8);
    CHECK(same_common(f * QSeries::one(12), f));
}

TEST_CASE("product precision follows the min rule with ord shifts") {
    QSeries f = series(1, {1, 2, 3}); // prec 4
    QSeries g = series(2, {5, 7});    // prec 4
    QSeries p = f * g;
    CHECK(p.ord() == 3);
    CHECK(p.prec() == 5); // min(4+2, 4+1)
    CHECK(p.coeff(3) == Rational(5));
    CHECK(p.coeff(4) == Rational(17));
    CHECK_THROWS_AS(p.coeff(5), PrecisionExceeded);
}

TEST_CASE("scaling") {
    QSeries f = series(0, {3, -24, -120, -96});
    QSeries s = Rational(1, 3) * f;
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(-8));
    CHECK(s.coeff(2) == Rational(-40));
    CHECK(s.coeff(3) == Rational(-32));

    std::mt19937 rng(3);
    QSeries g = random_series(rng, 0, 10);
    CHECK((Rational(0) * g).is_zero_to_precision());
    CHECK((Rational(-1) * g + g).is_zero_to_precision());
}

TEST_CASE("theta multiplies coefficients by their exponent") {
    QSeries c = series(0, {1, 24, 24, 96, 24});
    QSeries t = Rational(1, 24) * theta(c);
    CHECK(t.coeff(1) == Rational(1));
    CHECK(t.coeff(2) == Rational(2));
    CHECK(t.coeff(3) == Rational(12));
    CHECK(t.coeff(4) == Rational(4));
    CHECK(theta(QSeries::constant(Rational(5), 10)).is_zero_to_precision());
}

TEST_CASE("geometric series inverse") {
    QSeries f = series(0, {1, -1, 0, 0, 0, 0});
    QSeries g = invert(f);
    for (long e = 0; e < 6; ++e)
        CHECK(g.coeff(e) == Rational(1));
    CHECK_THROWS_AS(invert(QSeries::zero(5)), ZeroLeadingCoefficient);
}

TEST_CASE("inverse of a positive-order unit") {
    QSeries f = series(1, {1, -8, 12, 64});
    QSeries g = invert(f);
    CHECK(g.ord() == -1);
    CHECK(same_common(f * g, QSeries::one(3)));
}

TEST_CASE("integer powers") {
    QSeries f = series(0, {1, -1, 0});
    QSeries f2 = pow_int(f, 2);
    CHECK(f2.coeff(0) == Rational(1));
    CHECK(f2.coeff(1) == Rational(-2));
    CHECK(f2.coeff(2) == Rational(1));

    std::mt19937 rng(5);
    QSeries g = random_series(rng, 0, 8, true);
    CHECK(same_common(pow_int(g, 0), QSeries::one(8)));
    CHECK(same_common(pow_int(g, -2) * pow_int(g, 2), QSeries::one(8)));
}

TEST_CASE("equality states its certified range") {
    QSeries c = series(0, {1, 24, 24});
    EqResult r = eq_to(c, c, 3);
    CHECK(r.equal);
    CHECK(r.certified_upto == 3);

    QSeries e2a = series(0, {1, -8, -40});
    CHECK(eq_to(c, e2a, 1).equal);
    EqResult r2 = eq_to(c, e2a, 2);
    CHECK_FALSE(r2.equal);
    CHECK(r2.first_difference == 1);

    CHECK_THROWS_AS(eq_to(c, e2a, 10), PrecisionExceeded);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(42);
    for (int i = 0; i < 25; ++i) {
        QSeries f = random_series(rng, 0, 10);
        QSeries g = random_series(rng, 0, 10);
        QSeries h = random_series(rng, 0, 10);
        CHECK(same_common((f + g) + h, f + (g + h)));
        CHECK(same_common(f * (g + h), f * g + f * h));
        CHECK(same_common(f * g, g * f));
    }
}

TEST_CASE("theta is a derivation") {
    std::mt19937 rng(13);
    for (int i = 0; i < 25; ++i) {
        QSeries f = random_series(rng, 0, 12);
        QSeries g = random_series(rng, 0, 12);
        CHECK(same_common(theta(f * g), theta(f) * g + f * theta(g)));
    }
}

TEST_CASE("invert is an involution on units") {
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        QSeries f = random_series(rng, 0, 12, true);
        CHECK(same_common(invert(invert(f)), f));
    }
}

TEST_CASE("no coefficient outside the certified window") {
    QSeries f = series(0, {1, 2, 3});
    QSeries g = series(0, {4, 5});
    QSeries p = f * g;
    CHECK(p.prec() == 2);
    CHECK_THROWS_AS(p.coeff(2), PrecisionExceeded);
    CHECK_THROWS_AS((f + g).coeff(2), PrecisionExceeded);
}

TEST_CASE("subst_q2 doubles exponents and certifies the odd gaps") {
    QSeries f = series(0, {1, -24});
    QSeries s = subst_q2(f);
    CHECK(s.prec() == 4);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(1) == Rational(0));
    CHECK(s.coeff(2) == Rational(-24));
    CHECK(s.coeff(3) == Rational(0));
    CHECK(subst_q2(QSeries::zero(5)).is_zero_to_precision());
}
