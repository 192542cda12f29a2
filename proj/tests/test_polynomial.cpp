#include <doctest.h>

#include "qmf/forms.hpp"
#include "qmf/polynomial.hpp"
#include "test_util.hpp"

using namespace qmf;
using namespace qmf::testing;

TEST_CASE("lambda_n values") {
    CHECK(lambda_n(1) == Rational(70));
    CHECK(lambda_n(2) == Rational(66));
    CHECK(lambda_n(4) == Rational(323, 5));
    CHECK_THROWS_AS(lambda_n(0), DomainError);
    CHECK_THROWS_AS(lambda_n(-3), DomainError);
}

TEST_CASE("printed P_n and Q_n") {
    auto [p0, q0] = pq_polys(0);
    CHECK(p0.to_string() == "1");
    CHECK(q0.to_string() == "0");

    auto [p2, q2] = pq_polys(2);
    CHECK(p2.to_string() == "x^2 + 70");
    CHECK(q2.to_string() == "x");

    auto [p3, q3] = pq_polys(3);
    CHECK(p3.to_string() == "x^3 + 136x");
    CHECK(q3.to_string() == "x^2 + 66");

    auto [p4, q4] = pq_polys(4);
    CHECK(p4.to_string() == "x^4 + 201x^2 + 4550");
    CHECK(q4.to_string() == "x^3 + 131x");
}

TEST_CASE("parity, degree, and leading coefficients up to n = 40") {
    for (long n = 1; n <= 40; ++n) {
        auto [p, q] = pq_polys(n);
        CHECK(p.degree() == n);
        CHECK(q.degree() == n - 1);
        CHECK(p.coeff(n) == Rational(1));
        CHECK(q.coeff(n - 1) == Rational(1));
        for (long d = 0; d <= n; ++d) {
            if ((d % 2) != (n % 2))
                CHECK(p.coeff(d) == Rational(0));
            if (d <= n - 1 && (d % 2) == (n % 2))
                CHECK(q.coeff(d) == Rational(0));
        }
    }
}

TEST_CASE("Wronskian telescopes through the lambda products") {
    // W_n = P_{n+1} Q_n - P_n Q_{n+1} satisfies W_n = -lambda_n W_{n-1}
    Rational expected(-1); // W_0 = P_1 Q_0 - P_0 Q_1 = -1
    for (long n = 1; n <= 20; ++n) {
        expected = -lambda_n(n) * expected;
        auto [pn, qn] = pq_polys(n);
        auto [pn1, qn1] = pq_polys(n + 1);
        RationalPolynomial w = pn1 * qn + Rational(-1) * (pn * qn1);
        CHECK(w.degree() == 0);
        CHECK(w.coeff(0) == expected);
    }
}

TEST_CASE("terminating hypergeometric polynomials") {
    RationalPolynomial k4 = hypergeom_poly({Rational(-1, 3), Rational(0), Rational(1, 6)});
    CHECK(k4.to_string() == "1");

    RationalPolynomial k12 = hypergeom_poly({Rational(-1), Rational(-2, 3), Rational(-7, 6)});
    CHECK(k12.degree() == 1);
    CHECK(k12.coeff(0) == Rational(1));
    CHECK(k12.coeff(1) == Rational(-4, 7));

    CHECK_THROWS_AS(hypergeom_poly({Rational(1), Rational(1), Rational(1)}), NonTerminating);
    CHECK_THROWS_AS(hypergeom_poly({Rational(-3), Rational(5, 2), Rational(-1)}), PochhammerPole);
}

TEST_CASE("Horner evaluation at a q-series") {
    QSeries g = get_form(FormName::G, 2);
    auto [p2, q2] = pq_polys(2);
    QSeries v = poly_eval_qs(p2, g);
    CHECK(v.coeff(0) == Rational(71));
    CHECK(v.coeff(1) == Rational(-160));

    std::mt19937 rng(31);
    QSeries f = random_series(rng, 0, 10);
    CHECK(same_common(poly_eval_qs(RationalPolynomial::constant(Rational(1)), f),
                      QSeries::one(10)));
    CHECK(same_common(poly_eval_qs(RationalPolynomial::x(), f), f));
}
