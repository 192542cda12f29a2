#pragma once

#include <utility>
#include <vector>

#include "qmf/forms.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// The two hypergeometric-type equation families
///   f'' - ((k+1)/h) E f' + (k(k+1)/(2h)) E' f = 0
/// with (h, E) = (4, E_2A) on Gamma_0*(2) and (6, E_2) on SL_2(Z).
struct ODEFamily {
    enum class Label { TWO_A, SL2Z };

    long h;
    FormName e_series;
    Label label;

    static ODEFamily two_a() { return {4, FormName::E2A, Label::TWO_A}; }
    static ODEFamily sl2z() { return {6, FormName::E2, Label::SL2Z}; }
};

/// A q-series together with the weight it carries under the theta_k operator.
struct WeightedSeries {
    QSeries series;
    Rational weight;
};

/// Serre-type derivative f' - (k/(2h)) E f; raises the weight by 2.
WeightedSeries theta_k(const WeightedSeries& f, const ODEFamily& family);

/// Left-hand side of the equation evaluated at f; zero-to-precision on the
/// certified window means f is verified as a solution there.
QSeries ode_residual(const QSeries& f, const Rational& k, const ODEFamily& family);

/// theta_{k+2}(theta_k(f)) - (k(k+2)/64) C^2 f, the rewritten Gamma_0*(2)
/// equation; vanishes exactly when ode_residual does.
QSeries sharp_prime_residual(const QSeries& f, const Rational& k);

/// The weight-(k+1) quasimodular solution F_k, built by the square-root-free
/// recurrence F_{k+4} = G F_k + lambda_n Delta_2A F_{k-4} from F_3 = C'/24 and
/// F_7 = G C'/24 - Delta_2A. Requires k >= 3 with k = 3 mod 4.
QSeries build_Fk(long k, long prec);

/// Independent route to F_k: the closed form in P_n, Q_n with the square roots
/// eliminated by parity, evaluated directly as a polynomial in G and Delta_2A.
QSeries closed_form_Fk(long k, long prec);

/// Indicial roots of the family at exponent k: {0, (k+1)/h}.
std::pair<Rational, Rational> indicial_roots(const Rational& k, const ODEFamily& family);

enum class FrobeniusStatus { CLEAN, FREE_PARAMETER, OBSTRUCTED };

/// Outcome of the power-series recursion at an indicial root rho. The solution
/// series holds the coefficients c_m at exponent offset m from rho (its stated
/// ord is rho when rho is an integer, 0 otherwise); it is absent when a
/// resonant step carried a nonzero obstruction, the signature of a log q term.
struct FrobeniusReport {
    Rational rho;
    std::optional<QSeries> solution;
    std::vector<std::pair<long, Rational>> resonance_events; // (step m, obstruction)
    FrobeniusStatus status;
};

struct FrobeniusAuto {};

/// Runs the coefficient recursion c_0 = 1, I(rho+m) c_m = -(E-tail convolution)
/// up to prec coefficients. Throws NotAnIndicialRoot if rho is neither root;
/// the AUTO overload picks the larger root, which is resonance-free forward.
FrobeniusReport frobenius_solve(const ODEFamily& family, const Rational& k, const Rational& rho,
                                long prec);
FrobeniusReport frobenius_solve(const ODEFamily& family, const Rational& k, FrobeniusAuto,
                                long prec);

/// Certifies (k/8) G F_k + C theta_k(F_k) = -((k+1)/4) lambda_n Delta_2A F_{k-4}
/// through the given precision. Requires k >= 7, k = 3 mod 4.
bool key_lemma_check(long k, long prec);

/// Same identity with caller-supplied stand-ins for F_k and F_{k-4}.
bool key_lemma_holds(long k, const QSeries& fk, const QSeries& fk_minus4);

} // namespace qmf
