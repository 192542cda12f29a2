#include <doctest.h>

#include <atomic>
#include <thread>

#include "qmf/forms.hpp"
#include "test_util.hpp"

using namespace qmf;
using namespace qmf::testing;

TEST_CASE("E2 divisor sums") {
    QSeries e2 = eisenstein_e2(4);
    CHECK(e2.coeff(0) == Rational(1));
    CHECK(e2.coeff(1) == Rational(-24));
    CHECK(e2.coeff(2) == Rational(-72));
    CHECK(e2.coeff(3) == Rational(-96));
    CHECK_THROWS_AS(eisenstein_e2(0), DomainError);
}

TEST_CASE("E2A is the level-2 average of E2") {
    QSeries e2 = eisenstein_e2(4);
    QSeries e2a = Rational(1, 3) * (e2 + Rational(2) * subst_q2(e2));
    CHECK(same_to(e2a, series(0, {1, -8, -40, -32}), 4));
    CHECK(same_common(e2a, get_form(FormName::E2A, 4)));
}

TEST_CASE("C as an Eisenstein combination") {
    QSeries e2 = eisenstein_e2(4);
    QSeries c = Rational(2) * subst_q2(e2) - e2;
    CHECK(same_to(c, series(0, {1, 24, 24, 96}), 4));
}

TEST_CASE("eta products match the printed expansions") {
    QSeries d2a = eta_product({8, 8}, 5);
    CHECK(same_to(d2a, series(1, {1, -8, 12, 64}), 5));

    QSeries d = eta_product({-8, 16}, 5);
    CHECK(same_to(d, series(1, {1, 8, 28, 64}), 5));

    CHECK_THROWS_AS(eta_product({1, 0}, 5), FractionalPrefactor);
}

TEST_CASE("odd-divisor-sum expansions") {
    QSeries c = divisor_form_C(5);
    CHECK(c.coeff(0) == Rational(1));
    CHECK(c.coeff(3) == Rational(96)); // 24 * (1 + 3)
    QSeries d = divisor_form_D(5);
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(4) == Rational(64));
}

TEST_CASE("G from the catalog") {
    QSeries g = get_form(FormName::G, 3);
    CHECK(same_to(g, series(0, {1, -80, -400}), 3));
}

TEST_CASE("catalog series at two precisions agree on the common window") {
    for (FormName name : {FormName::E2A, FormName::C, FormName::D, FormName::DELTA_2A,
                          FormName::G, FormName::DELTA, FormName::J_INV_1728}) {
        QSeries lo = get_form(name, 20);
        QSeries hi = get_form(name, 40);
        CHECK(same_to(lo, hi, 20));
    }
}

TEST_CASE("cross-construction checks at moderate precision") {
    const long n = 80;
    QSeries c = get_form(FormName::C, n);
    QSeries d = get_form(FormName::D, n);
    QSeries d2a = get_form(FormName::DELTA_2A, n);
    CHECK(same_to(c, divisor_form_C(n), n));
    CHECK(same_to(d, divisor_form_D(n), n));
    CHECK(same_common(d2a, d * (c * c - Rational(64) * d)));
}

TEST_CASE("logarithmic derivative of Delta_2A is E2A") {
    const long n = 60;
    QSeries d2a = get_form(FormName::DELTA_2A, n);
    QSeries e2a = get_form(FormName::E2A, n);
    CHECK(same_common(theta(d2a), e2a * d2a));
    CHECK(same_common(theta(d2a) * invert(d2a), e2a));
}

TEST_CASE("subst_q2 is a ring morphism") {
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        QSeries f = random_series(rng, 0, 10);
        QSeries g = random_series(rng, 0, 10);
        CHECK(same_common(subst_q2(f * g), subst_q2(f) * subst_q2(g)));
    }
}

TEST_CASE("Delta via eta power and via E4/E6") {
    const long n = 60;
    QSeries delta = get_form(FormName::DELTA, n);
    CHECK(same_to(delta, eta_product({24, 0}, n), n));
}

TEST_CASE("1728/j and its inverse recover j") {
    const long n = 30;
    QSeries j1728 = get_form(FormName::J_INV_1728, n);
    CHECK(j1728.effective_order() == 1);
    QSeries e4 = get_form(FormName::E4, n);
    QSeries j = pow_int(e4, 3) * invert(get_form(FormName::DELTA, n));
    CHECK(j.coeff(-1) == Rational(1));
    CHECK(j.coeff(0) == Rational(744));
    CHECK(j.coeff(1) == Rational(196884));
    CHECK(same_common(invert(j1728), Rational(1, 1728) * j));
}

TEST_CASE("form cache is idempotent under repeated lookups") {
    QSeries a = get_form(FormName::C, 25);
    QSeries b = get_form(FormName::C, 25);
    CHECK(same_to(a, b, 25));
}

TEST_CASE("form cache survives concurrent lookup-or-compute") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&ok] {
            for (FormName name : {FormName::G, FormName::DELTA_2A, FormName::E2A}) {
                QSeries s = get_form(name, 35);
                if (!same_to(s, get_form(name, 50), 35))
                    ok = false;
            }
        });
    for (auto& w : workers)
        w.join();
    CHECK(ok.load());
}
