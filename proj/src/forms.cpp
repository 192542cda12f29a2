#include "qmf/forms.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "qmf/errors.hpp"

namespace qmf {

std::string form_name_str(FormName name) {
    switch (name) {
    case FormName::E2: return "E2";
    case FormName::E2_2TAU: return "E2_2TAU";
    case FormName::E4: return "E4";
    case FormName::E4_2TAU: return "E4_2TAU";
    case FormName::E6: return "E6";
    case FormName::E6_2TAU: return "E6_2TAU";
    case FormName::E2A: return "E2A";
    case FormName::C: return "C";
    case FormName::D: return "D";
    case FormName::DELTA_2A: return "DELTA_2A";
    case FormName::G: return "G";
    case FormName::DELTA: return "DELTA";
    case FormName::J_INV_1728: return "J_INV_1728";
    }
    return "?";
}

std::optional<FormName> parse_form_name(const std::string& s) {
    static const std::map<std::string, FormName> table = {
        {"E2", FormName::E2},           {"E2_2TAU", FormName::E2_2TAU},
        {"E4", FormName::E4},           {"E4_2TAU", FormName::E4_2TAU},
        {"E6", FormName::E6},           {"E6_2TAU", FormName::E6_2TAU},
        {"E2A", FormName::E2A},         {"C", FormName::C},
        {"D", FormName::D},             {"DELTA_2A", FormName::DELTA_2A},
        {"G", FormName::G},             {"DELTA", FormName::DELTA},
        {"J_INV_1728", FormName::J_INV_1728},
    };
    auto it = table.find(s);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

namespace {

// sum over divisors d of n of d^r
Integer sigma(long n, int r) {
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned>(r));
        s += dp;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned>(r));
            s += dp;
        }
    }
    return s;
}

QSeries eisenstein(long prec, long scale, int r) {
    std::vector<Rational> v(static_cast<size_t>(prec));
    v[0] = Rational(1);
    for (long n = 1; n < prec; ++n) {
        Integer c = Integer(scale) * sigma(n, r);
        v[static_cast<size_t>(n)] = Rational(c);
    }
    return QSeries(0, std::move(v));
}

// prod_{n>=1} (1 - q^{s n}), certified below q^prec
QSeries euler_product(long step, long prec) {
    std::vector<Rational> v(static_cast<size_t>(prec));
    v[0] = Rational(1);
    QSeries acc(0, std::move(v));
    for (long n = 1; step * n < prec; ++n) {
        std::vector<Rational> f(static_cast<size_t>(prec));
        f[0] = Rational(1);
        f[static_cast<size_t>(step * n)] = Rational(-1);
        // sparse factor goes first so the convolution skips its zero terms
        acc = QSeries(0, std::move(f)) * acc;
    }
    return acc;
}

} // namespace

QSeries eisenstein_e2(long prec) {
    if (prec < 1)
        throw DomainError("eisenstein_e2: prec must be >= 1");
    return eisenstein(prec, -24, 1);
}

QSeries eisenstein_e4(long prec) {
    if (prec < 1)
        throw DomainError("eisenstein_e4: prec must be >= 1");
    return eisenstein(prec, 240, 3);
}

QSeries eisenstein_e6(long prec) {
    if (prec < 1)
        throw DomainError("eisenstein_e6: prec must be >= 1");
    return eisenstein(prec, -504, 5);
}

QSeries eta_product(const EtaProductSpec& spec, long prec) {
    if ((spec.a + 2 * spec.b) % 24 != 0)
        throw FractionalPrefactor("eta exponents (" + std::to_string(spec.a) + ", " +
                                  std::to_string(spec.b) + ") give a fractional q-prefactor");
    if (prec < 1)
        throw DomainError("eta_product: prec must be >= 1");
    long shift = (spec.a + 2 * spec.b) / 24;
    QSeries r = QSeries::one(prec);
    if (spec.a != 0)
        r = r * pow_int(euler_product(1, prec), spec.a);
    if (spec.b != 0)
        r = r * pow_int(euler_product(2, prec), spec.b);
    return (QSeries::monomial(Rational(1), shift, prec + shift) * r).truncated(prec);
}

QSeries divisor_form_C(long prec) {
    if (prec < 1)
        throw DomainError("divisor_form_C: prec must be >= 1");
    std::vector<Rational> v(static_cast<size_t>(prec));
    v[0] = Rational(1);
    for (long n = 1; n < prec; ++n) {
        Integer s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0 && d % 2 == 1)
                s += d;
        Integer c = Integer(24) * s;
        v[static_cast<size_t>(n)] = Rational(c);
    }
    return QSeries(0, std::move(v));
}

QSeries divisor_form_D(long prec) {
    if (prec < 1)
        throw DomainError("divisor_form_D: prec must be >= 1");
    std::vector<Rational> v(static_cast<size_t>(prec));
    for (long n = 1; n < prec; ++n) {
        Integer s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0 && d % 2 == 1) {
                Integer m(n / d);
                s += m * m * m;
            }
        v[static_cast<size_t>(n)] = Rational(s);
    }
    return QSeries(0, std::move(v));
}

namespace {

QSeries build_form(FormName name, long prec) {
    switch (name) {
    case FormName::E2:
        return eisenstein_e2(prec);
    case FormName::E2_2TAU:
        return subst_q2(eisenstein_e2(prec)).truncated(prec);
    case FormName::E4:
        return eisenstein_e4(prec);
    case FormName::E4_2TAU:
        return subst_q2(eisenstein_e4(prec)).truncated(prec);
    case FormName::E6:
        return eisenstein_e6(prec);
    case FormName::E6_2TAU:
        return subst_q2(eisenstein_e6(prec)).truncated(prec);
    case FormName::E2A:
        return Rational(1, 3) * (get_form(FormName::E2, prec) +
                                 Rational(2) * get_form(FormName::E2_2TAU, prec));
    case FormName::C:
        return Rational(2) * get_form(FormName::E2_2TAU, prec) - get_form(FormName::E2, prec);
    case FormName::D:
        return eta_product({-8, 16}, prec);
    case FormName::DELTA_2A:
        return eta_product({8, 8}, prec);
    case FormName::G: {
        QSeries c = get_form(FormName::C, prec);
        return c * c - Rational(128) * get_form(FormName::D, prec);
    }
    case FormName::DELTA: {
        QSeries e4 = get_form(FormName::E4, prec);
        QSeries e6 = get_form(FormName::E6, prec);
        return Rational(1, 1728) * (e4 * e4 * e4 - e6 * e6);
    }
    case FormName::J_INV_1728: {
        QSeries e4 = get_form(FormName::E4, prec);
        return Rational(1728) * get_form(FormName::DELTA, prec) * invert(e4 * e4 * e4);
    }
    }
    throw DomainError("unknown form tag");
}

std::mutex cache_mutex;
std::map<std::pair<FormName, long>, QSeries> cache; // guarded by cache_mutex

} // namespace

QSeries get_form(FormName name, long prec) {
    if (prec < 1)
        throw DomainError("get_form: prec must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({name, prec});
        if (it != cache.end())
            return it->second;
    }
    QSeries s = build_form(name, prec);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(name, prec), std::move(s)).first->second;
}

} // namespace qmf
