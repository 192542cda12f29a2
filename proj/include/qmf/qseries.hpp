#pragma once

#include <optional>
#include <vector>

#include "qmf/errors.hpp"
#include "qmf/rational.hpp"

namespace qmf {

/// Truncated formal power series in q with exact rational coefficients.
///
/// Coefficients are known exactly for every exponent e with ord() <= e < prec();
/// exponents below ord() are exactly zero, exponents at or above prec() are
/// unknown. Operations propagate the certified window pessimistically and never
/// extend it.
class QSeries {
public:
    /// Zero series certified below q^prec.
    explicit QSeries(long prec) : ord_(prec), prec_(prec) {}

    QSeries(long ord, std::vector<Rational> coeffs)
        : ord_(ord), prec_(ord + static_cast<long>(coeffs.size())), coeffs_(std::move(coeffs)) {
        trim();
    }

    static QSeries zero(long prec) { return QSeries(prec); }
    static QSeries one(long prec);
    static QSeries constant(const Rational& c, long prec);
    static QSeries monomial(const Rational& c, long exponent, long prec);

    long ord() const { return ord_; }
    long prec() const { return prec_; }

    /// Exact coefficient at exponent e; zero below the window, throws above it.
    const Rational& coeff(long e) const;

    /// Exponent of the first nonzero coefficient, or nullopt if zero-to-precision.
    std::optional<long> effective_order() const;

    bool is_zero_to_precision() const { return !effective_order().has_value(); }

    /// Copy with the certified window cut down to [ord, new_prec).
    QSeries truncated(long new_prec) const;

private:
    void trim();

    long ord_;
    long prec_;
    std::vector<Rational> coeffs_; // exponent ord_ + i
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator*(const QSeries& f, const QSeries& g);
QSeries operator*(const Rational& r, const QSeries& f);
inline QSeries operator*(const QSeries& f, const Rational& r) { return r * f; }

/// q d/dq: multiplies the coefficient at exponent e by e.
QSeries theta(const QSeries& f);

/// Multiplicative inverse after factoring out q^e at the effective order e.
/// Throws ZeroLeadingCoefficient on a zero-to-precision input.
QSeries invert(const QSeries& f);

/// f^m by binary powering; negative m goes through invert().
QSeries pow_int(const QSeries& f, long m);

/// q -> q^2 substitution; doubles both ord and prec.
QSeries subst_q2(const QSeries& f);

/// Outcome of a truncated-equality test: which exponent range was certified,
/// and the first disagreeing exponent when unequal.
struct EqResult {
    bool equal;
    long certified_upto; // all exponents e < certified_upto were compared
    std::optional<long> first_difference;
};

/// Compares coefficients for all exponents below `upto`.
/// Throws PrecisionExceeded if either series is not certified that far.
EqResult eq_to(const QSeries& f, const QSeries& g, long upto);

/// Equality over the largest window both sides certify.
/// Throws PrecisionExceeded if that window is empty.
EqResult eq_common(const QSeries& f, const QSeries& g);

} // namespace qmf
