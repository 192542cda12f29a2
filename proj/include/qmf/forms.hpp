#pragma once

#include <optional>
#include <string>

#include "qmf/qseries.hpp"

namespace qmf {

/// Catalog tags for the named q-expansions.
enum class FormName {
    E2,
    E2_2TAU,
    E4,
    E4_2TAU,
    E6,
    E6_2TAU,
    E2A,
    C,
    D,
    DELTA_2A,
    G,
    DELTA,
    J_INV_1728,
};

std::string form_name_str(FormName name);
std::optional<FormName> parse_form_name(const std::string& s);

/// eta(tau)^a * eta(2tau)^b; (a + 2b) must be divisible by 24 so the
/// q-prefactor exponent is an integer.
struct EtaProductSpec {
    long a;
    long b;
};

/// 1 - 24 sum sigma_1(n) q^n
QSeries eisenstein_e2(long prec);
/// 1 + 240 sum sigma_3(n) q^n
QSeries eisenstein_e4(long prec);
/// 1 - 504 sum sigma_5(n) q^n
QSeries eisenstein_e6(long prec);

/// Throws FractionalPrefactor unless (a + 2b) is divisible by 24.
QSeries eta_product(const EtaProductSpec& spec, long prec);

/// Independent odd-divisor-sum expansions, used as oracles for the
/// Eisenstein/eta constructions of C and D.
QSeries divisor_form_C(long prec);
QSeries divisor_form_D(long prec);

/// Canonical construction per tag, memoized by (name, prec).
/// The cache is safe for concurrent lookup-or-compute.
QSeries get_form(FormName name, long prec);

} // namespace qmf
