#include "qmf/qseries.hpp"

#include <algorithm>

namespace qmf {

namespace {
const Rational kZero{};
} // namespace

QSeries QSeries::one(long prec) { return constant(Rational(1), prec); }

QSeries QSeries::constant(const Rational& c, long prec) { return monomial(c, 0, prec); }

QSeries QSeries::monomial(const Rational& c, long exponent, long prec) {
    if (exponent >= prec || c.is_zero())
        return QSeries(prec);
    std::vector<Rational> v(static_cast<size_t>(prec - exponent));
    v[0] = c;
    return QSeries(exponent, std::move(v));
}

const Rational& QSeries::coeff(long e) const {
    if (e >= prec_)
        throw PrecisionExceeded("coefficient at q^" + std::to_string(e) +
                                " requested, certified only below q^" + std::to_string(prec_));
    if (e < ord_)
        return kZero;
    return coeffs_[static_cast<size_t>(e - ord_)];
}

std::optional<long> QSeries::effective_order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return ord_ + static_cast<long>(i);
    return std::nullopt;
}

QSeries QSeries::truncated(long new_prec) const {
    if (new_prec >= prec_)
        return *this;
    QSeries r(*this);
    r.prec_ = new_prec;
    long keep = std::max(0L, new_prec - ord_);
    r.coeffs_.resize(static_cast<size_t>(keep));
    if (keep == 0)
        r.ord_ = new_prec;
    return r;
}

void QSeries::trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        ord_ += static_cast<long>(lead);
    }
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    long prec = std::min(f.prec(), g.prec());
    long ord = std::min({f.ord(), g.ord(), prec});
    std::vector<Rational> v(static_cast<size_t>(prec - ord));
    for (long e = ord; e < prec; ++e)
        v[static_cast<size_t>(e - ord)] = f.coeff(e) + g.coeff(e);
    return QSeries(ord, std::move(v));
}

QSeries operator-(const QSeries& f) { return Rational(-1) * f; }

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
    long ord = f.ord() + g.ord();
    long prec = std::min(f.prec() + g.ord(), g.prec() + f.ord());
    if (prec <= ord)
        return QSeries::zero(prec);
    std::vector<Rational> v(static_cast<size_t>(prec - ord));
    mpq_class acc, term;
    for (long i = f.ord(); i < f.prec(); ++i) {
        const Rational& fi = f.coeff(i);
        if (fi.is_zero())
            continue;
        long jmax = std::min(g.prec(), prec - i);
        for (long j = g.ord(); j < jmax; ++j) {
            const Rational& gj = g.coeff(j);
            if (gj.is_zero())
                continue;
            term = fi.raw() * gj.raw();
            auto& slot = v[static_cast<size_t>(i + j - ord)];
            slot += Rational(term);
        }
    }
    return QSeries(ord, std::move(v));
}

QSeries operator*(const Rational& r, const QSeries& f) {
    std::vector<Rational> v(static_cast<size_t>(f.prec() - f.ord()));
    for (long e = f.ord(); e < f.prec(); ++e)
        v[static_cast<size_t>(e - f.ord())] = r * f.coeff(e);
    return QSeries(f.ord(), std::move(v));
}

QSeries theta(const QSeries& f) {
    std::vector<Rational> v(static_cast<size_t>(f.prec() - f.ord()));
    for (long e = f.ord(); e < f.prec(); ++e)
        v[static_cast<size_t>(e - f.ord())] = Rational(e) * f.coeff(e);
    return QSeries(f.ord(), std::move(v));
}

QSeries invert(const QSeries& f) {
    auto e = f.effective_order();
    if (!e)
        throw ZeroLeadingCoefficient("cannot invert a series that is zero to precision");
    long lead = *e;
    long len = f.prec() - lead; // unit part u has len certified terms
    std::vector<Rational> g(static_cast<size_t>(len));
    const Rational& u0 = f.coeff(lead);
    g[0] = Rational(1) / u0;
    for (long m = 1; m < len; ++m) {
        Rational s;
        for (long i = 1; i <= m; ++i)
            s += f.coeff(lead + i) * g[static_cast<size_t>(m - i)];
        g[static_cast<size_t>(m)] = -s / u0;
    }
    return QSeries(-lead, std::move(g));
}

QSeries pow_int(const QSeries& f, long m) {
    if (m < 0)
        return pow_int(invert(f), -m);
    // f^0 is exactly 1; truncation of f cannot affect it, so keep f's prec
    QSeries acc = QSeries::one(std::max(f.prec(), 1L));
    QSeries base = f;
    while (m > 0) {
        if (m & 1)
            acc = acc * base;
        m >>= 1;
        if (m > 0)
            base = base * base;
    }
    return acc;
}

QSeries subst_q2(const QSeries& f) {
    long ord = 2 * f.ord();
    long prec = 2 * f.prec();
    std::vector<Rational> v(static_cast<size_t>(prec - ord));
    for (long e = f.ord(); e < f.prec(); ++e)
        v[static_cast<size_t>(2 * e - ord)] = f.coeff(e);
    return QSeries(ord, std::move(v));
}

EqResult eq_to(const QSeries& f, const QSeries& g, long upto) {
    if (upto > f.prec() || upto > g.prec())
        throw PrecisionExceeded("equality requested below q^" + std::to_string(upto) +
                                ", certified only below q^" +
                                std::to_string(std::min(f.prec(), g.prec())));
    for (long e = std::min(f.ord(), g.ord()); e < upto; ++e)
        if (f.coeff(e) != g.coeff(e))
            return {false, upto, e};
    return {true, upto, std::nullopt};
}

EqResult eq_common(const QSeries& f, const QSeries& g) {
    long upto = std::min(f.prec(), g.prec());
    if (upto <= std::min(f.ord(), g.ord()) && upto <= 0)
        throw PrecisionExceeded("no common certified window");
    return eq_to(f, g, upto);
}

} // namespace qmf
