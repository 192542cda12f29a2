#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/rational.hpp"

namespace qmf {

/// Dense univariate polynomial with exact rational coefficients, degree 0 upward.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial x();

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    Rational coeff(long d) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// "x^4 + 201x^2 + 4550" style, rationals as num/den.
    std::string to_string() const;

    friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
    friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
    friend RationalPolynomial operator*(const Rational& r, const RationalPolynomial& p);

    /// p(x) -> x * p(x)
    RationalPolynomial shifted_up() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// 4(4n+1)(4n+3)/(n(n+1)); throws DomainError for n < 1.
Rational lambda_n(long n);

/// The pair (P_n, Q_n) of the shared three-term recurrence
/// P_{n+1} = x P_n + lambda_n P_{n-1}, seeded (1, x) and (0, 1).
std::pair<RationalPolynomial, RationalPolynomial> pq_polys(long n);

struct HypergeomParams {
    Rational a;
    Rational b;
    Rational c;
};

/// Terminating Gauss series sum_m (a)_m (b)_m / ((c)_m m!) x^m.
/// Throws NonTerminating unless a or b is a non-positive integer,
/// PochhammerPole if (c)_m vanishes before termination.
RationalPolynomial hypergeom_poly(const HypergeomParams& p);

/// Horner evaluation of p at a q-series argument.
QSeries poly_eval_qs(const RationalPolynomial& p, const QSeries& f);

} // namespace qmf
