#include "qmf/polynomial.hpp"

#include "qmf/errors.hpp"

namespace qmf {

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::x() {
    return RationalPolynomial({Rational(0), Rational(1)});
}

Rational RationalPolynomial::coeff(long d) const {
    if (d < 0 || d >= static_cast<long>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<size_t>(d)];
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::string RationalPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        Rational c = coeff(d);
        if (c.is_zero())
            continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit_coeff = (a == Rational(1)) && d > 0;
        if (!unit_coeff)
            out += a.to_string();
        if (d >= 1) {
            out += "x";
            if (d >= 2)
                out += "^" + std::to_string(d);
        }
    }
    return out;
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = p.coeff(static_cast<long>(i)) + q.coeff(static_cast<long>(i));
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
    if (p.is_zero() || q.is_zero())
        return RationalPolynomial();
    std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& r, const RationalPolynomial& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& c : v)
        c *= r;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::shifted_up() const {
    if (is_zero())
        return RationalPolynomial();
    std::vector<Rational> v(coeffs_.size() + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i + 1] = coeffs_[i];
    return RationalPolynomial(std::move(v));
}

Rational lambda_n(long n) {
    if (n < 1)
        throw DomainError("lambda_n requires n >= 1, got " + std::to_string(n));
    return Rational(4 * (4 * n + 1) * (4 * n + 3), n * (n + 1));
}

std::pair<RationalPolynomial, RationalPolynomial> pq_polys(long n) {
    if (n < 0)
        throw DomainError("pq_polys requires n >= 0");
    RationalPolynomial p_prev = RationalPolynomial::constant(Rational(1)); // P_0
    RationalPolynomial p_cur = RationalPolynomial::x();                    // P_1
    RationalPolynomial q_prev;                                             // Q_0 = 0
    RationalPolynomial q_cur = RationalPolynomial::constant(Rational(1));  // Q_1
    if (n == 0)
        return {p_prev, q_prev};
    for (long m = 1; m < n; ++m) {
        Rational lam = lambda_n(m);
        RationalPolynomial p_next = p_cur.shifted_up() + lam * p_prev;
        RationalPolynomial q_next = q_cur.shifted_up() + lam * q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    return {p_cur, q_cur};
}

namespace {

// Non-positive integer parameters terminate the series at degree -v.
bool terminates_at(const Rational& v, long& degree_out) {
    if (!v.is_integer() || v.sign() > 0)
        return false;
    degree_out = -static_cast<long>(v.num().get_si());
    return true;
}

} // namespace

RationalPolynomial hypergeom_poly(const HypergeomParams& p) {
    long da = 0, db = 0;
    bool ta = terminates_at(p.a, da);
    bool tb = terminates_at(p.b, db);
    if (!ta && !tb)
        throw NonTerminating("neither parameter is a non-positive integer");
    long deg = ta && tb ? std::min(da, db) : (ta ? da : db);
    std::vector<Rational> v(static_cast<size_t>(deg) + 1);
    Rational term(1);
    v[0] = term;
    for (long m = 1; m <= deg; ++m) {
        Rational cm = p.c + Rational(m - 1);
        if (cm.is_zero())
            throw PochhammerPole("(c)_" + std::to_string(m) + " vanishes before termination");
        term *= (p.a + Rational(m - 1)) * (p.b + Rational(m - 1)) / (cm * Rational(m));
        v[static_cast<size_t>(m)] = term;
    }
    return RationalPolynomial(std::move(v));
}

QSeries poly_eval_qs(const RationalPolynomial& p, const QSeries& f) {
    if (p.is_zero())
        return QSeries::zero(f.prec());
    QSeries acc = QSeries::constant(p.coeff(p.degree()), f.prec());
    for (long d = p.degree() - 1; d >= 0; --d)
        acc = acc * f + QSeries::constant(p.coeff(d), f.prec());
    return acc;
}

} // namespace qmf
