#pragma once

#include <string>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

enum class RingTag {
    QM_GAMMA02,       // Q[E2, C, D], degrees 2, 2, 4
    MOD_GAMMA02,      // Q[C, D], degrees 2, 4
    MOD_GAMMA02_STAR, // free ring Q[C^2, Delta_2A] plus the odd generator C^3 - 128CD
};

std::string ring_tag_str(RingTag tag);
std::optional<RingTag> parse_ring_tag(const std::string& s);

/// Complete, duplicate-free list of generator-exponent tuples of one weight.
/// QM_GAMMA02 tuples are (a, b, c) over (E2, C, D); MOD_GAMMA02 tuples (b, c)
/// over (C, D); MOD_GAMMA02_STAR tuples (a, b) over (C^2, Delta_2A), each
/// multiplied by C^3 - 128CD when the weight is 2 mod 4.
struct MonomialBasis {
    RingTag ring_tag;
    long weight;
    std::vector<std::vector<long>> exponent_tuples;

    bool odd_generator() const { return ring_tag == RingTag::MOD_GAMMA02_STAR && weight % 4 == 2; }
};

/// Throws DomainError on odd or negative weight.
MonomialBasis enumerate_basis(RingTag tag, long weight);

/// q-expansion of one basis monomial.
QSeries basis_monomial(const MonomialBasis& basis, const std::vector<long>& tuple, long prec);

enum class SolveStatus { UNIQUE, NOT_IN_SPAN, UNDERDETERMINED };

std::string solve_status_str(SolveStatus s);

struct LinearSolveReport {
    SolveStatus status;
    std::vector<Rational> solution; // meaningful only when UNIQUE
};

/// Fraction-exact Gaussian elimination with full consistency checking.
LinearSolveReport exact_linear_solve(const std::vector<std::vector<Rational>>& matrix,
                                     const std::vector<Rational>& rhs);

struct DecompositionReport {
    MonomialBasis basis;
    std::vector<Rational> coefficients; // aligned to basis.exponent_tuples when UNIQUE
    SolveStatus status;
    long certified_prec;
};

/// Matches the q-coefficients of f against the basis monomial expansions over
/// an overdetermined window (basis size + margin rows). Throws
/// PrecisionExceeded if f does not certify that many coefficients.
DecompositionReport decompose(const QSeries& f, const MonomialBasis& basis, long margin = 10);

/// Rebuilds the series from a UNIQUE report's coefficients (for round-trip checks).
QSeries recompose(const DecompositionReport& report, long prec);

} // namespace qmf
