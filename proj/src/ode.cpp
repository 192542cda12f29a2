#include "qmf/ode.hpp"

#include <algorithm>

#include "qmf/errors.hpp"
#include "qmf/polynomial.hpp"

namespace qmf {

WeightedSeries theta_k(const WeightedSeries& f, const ODEFamily& family) {
    QSeries e = get_form(family.e_series, f.series.prec());
    Rational coeff = f.weight / Rational(2 * family.h);
    return {theta(f.series) - coeff * (e * f.series), f.weight + Rational(2)};
}

QSeries ode_residual(const QSeries& f, const Rational& k, const ODEFamily& family) {
    if (f.prec() < 1)
        throw PrecisionExceeded("ode_residual: input carries no certified coefficients");
    QSeries e = get_form(family.e_series, f.prec());
    QSeries df = theta(f);
    Rational c1 = (k + Rational(1)) / Rational(family.h);
    Rational c0 = k * (k + Rational(1)) / Rational(2 * family.h);
    return theta(df) - c1 * (e * df) + c0 * (theta(e) * f);
}

QSeries sharp_prime_residual(const QSeries& f, const Rational& k) {
    if (f.prec() < 1)
        throw PrecisionExceeded("sharp_prime_residual: input carries no certified coefficients");
    ODEFamily fam = ODEFamily::two_a();
    WeightedSeries t1 = theta_k({f, k}, fam);
    WeightedSeries t2 = theta_k(t1, fam);
    QSeries c = get_form(FormName::C, f.prec());
    return t2.series - (k * (k + Rational(2)) / Rational(64)) * (c * c * f);
}

namespace {

void require_theorem_k(long k) {
    if (k < 3 || k % 4 != 3)
        throw DomainError("k must be >= 3 and congruent to 3 mod 4, got " + std::to_string(k));
}

} // namespace

QSeries build_Fk(long k, long prec) {
    require_theorem_k(k);
    QSeries f3 = Rational(1, 24) * theta(get_form(FormName::C, prec));
    if (k == 3)
        return f3;
    QSeries g = get_form(FormName::G, prec);
    QSeries d2a = get_form(FormName::DELTA_2A, prec);
    QSeries prev = f3;
    QSeries cur = g * f3 - d2a; // F_7
    for (long kc = 7; kc < k; kc += 4) {
        long n = (kc - 3) / 4;
        QSeries next = g * cur + lambda_n(n) * (d2a * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

QSeries closed_form_Fk(long k, long prec) {
    require_theorem_k(k);
    long n = (k - 3) / 4;
    auto [pn, qn] = pq_polys(n);
    QSeries g = get_form(FormName::G, prec);
    QSeries d2a = get_form(FormName::DELTA_2A, prec);

    // sqrt(Delta)^m R(G/sqrt(Delta)) expands to sum_j r_j G^j Delta^{(m-j)/2},
    // integral exponents by the parity of R
    auto parity_expand = [&](const RationalPolynomial& r, long m) {
        QSeries acc = QSeries::zero(prec);
        for (long j = 0; j <= r.degree(); ++j) {
            Rational rj = r.coeff(j);
            if (rj.is_zero())
                continue;
            if ((m - j) % 2 != 0 || m < j)
                throw DomainError("parity expansion produced a fractional Delta exponent");
            acc = acc + rj * (pow_int(g, j) * pow_int(d2a, (m - j) / 2));
        }
        return acc;
    };

    QSeries cp24 = Rational(1, 24) * theta(get_form(FormName::C, prec));
    QSeries p_part = n == 0 ? QSeries::one(prec) : parity_expand(pn, n);
    QSeries result = p_part * cp24;
    if (!qn.is_zero())
        result = result - parity_expand(qn, n + 1);
    return result;
}

std::pair<Rational, Rational> indicial_roots(const Rational& k, const ODEFamily& family) {
    return {Rational(0), (k + Rational(1)) / Rational(family.h)};
}

FrobeniusReport frobenius_solve(const ODEFamily& family, const Rational& k, const Rational& rho,
                                long prec) {
    auto [r0, r1] = indicial_roots(k, family);
    if (rho != r0 && rho != r1)
        throw NotAnIndicialRoot("rho = " + rho.to_string() + " is not an indicial root");
    if (prec < 1)
        throw PrecisionExceeded("frobenius_solve: prec must be >= 1");

    QSeries e = get_form(family.e_series, prec);
    Rational c1 = (k + Rational(1)) / Rational(family.h);
    Rational c0 = k * (k + Rational(1)) / Rational(2 * family.h);
    auto indicial = [&](const Rational& s) { return s * s - c1 * s; };

    std::vector<Rational> c(static_cast<size_t>(prec));
    c[0] = Rational(1);
    FrobeniusReport report{rho, std::nullopt, {}, FrobeniusStatus::CLEAN};
    for (long m = 1; m < prec; ++m) {
        Rational rhs;
        for (long j = 1; j <= m; ++j) {
            const Rational& ej = e.coeff(j);
            if (ej.is_zero())
                continue;
            rhs += ej * (c1 * (rho + Rational(m - j)) - c0 * Rational(j)) *
                   c[static_cast<size_t>(m - j)];
        }
        Rational denom = indicial(rho + Rational(m));
        if (denom.is_zero()) {
            report.resonance_events.emplace_back(m, rhs);
            if (!rhs.is_zero()) {
                report.status = FrobeniusStatus::OBSTRUCTED;
                return report;
            }
            report.status = FrobeniusStatus::FREE_PARAMETER;
            c[static_cast<size_t>(m)] = Rational(0);
        } else {
            c[static_cast<size_t>(m)] = rhs / denom;
        }
    }
    long shift = rho.is_integer() ? static_cast<long>(rho.num().get_si()) : 0;
    report.solution = QSeries(shift, std::move(c));
    return report;
}

FrobeniusReport frobenius_solve(const ODEFamily& family, const Rational& k, FrobeniusAuto,
                                long prec) {
    auto [r0, r1] = indicial_roots(k, family);
    return frobenius_solve(family, k, r0 < r1 ? r1 : r0, prec);
}

bool key_lemma_holds(long k, const QSeries& fk, const QSeries& fk_minus4) {
    require_theorem_k(k);
    if (k < 7)
        throw DomainError("key lemma requires k >= 7");
    long n = (k - 3) / 4;
    long prec = std::min(fk.prec(), fk_minus4.prec());
    QSeries g = get_form(FormName::G, prec);
    QSeries c = get_form(FormName::C, prec);
    QSeries d2a = get_form(FormName::DELTA_2A, prec);
    WeightedSeries tfk = theta_k({fk, Rational(k)}, ODEFamily::two_a());
    QSeries lhs = (Rational(k) / Rational(8)) * (g * fk) + c * tfk.series;
    QSeries rhs = (-(Rational(k) + Rational(1)) / Rational(4)) * lambda_n(n) * (d2a * fk_minus4);
    return eq_common(lhs, rhs).equal;
}

bool key_lemma_check(long k, long prec) {
    return key_lemma_holds(k, build_Fk(k, prec), build_Fk(k - 4, prec));
}

} // namespace qmf
