#include "qmf/decompose.hpp"

#include "qmf/errors.hpp"
#include "qmf/forms.hpp"

namespace qmf {

std::string ring_tag_str(RingTag tag) {
    switch (tag) {
    case RingTag::QM_GAMMA02: return "QM_GAMMA02";
    case RingTag::MOD_GAMMA02: return "MOD_GAMMA02";
    case RingTag::MOD_GAMMA02_STAR: return "MOD_GAMMA02_STAR";
    }
    return "?";
}

std::optional<RingTag> parse_ring_tag(const std::string& s) {
    if (s == "QM_GAMMA02")
        return RingTag::QM_GAMMA02;
    if (s == "MOD_GAMMA02")
        return RingTag::MOD_GAMMA02;
    if (s == "MOD_GAMMA02_STAR")
        return RingTag::MOD_GAMMA02_STAR;
    return std::nullopt;
}

std::string solve_status_str(SolveStatus s) {
    switch (s) {
    case SolveStatus::UNIQUE: return "UNIQUE";
    case SolveStatus::NOT_IN_SPAN: return "NOT_IN_SPAN";
    case SolveStatus::UNDERDETERMINED: return "UNDERDETERMINED";
    }
    return "?";
}

MonomialBasis enumerate_basis(RingTag tag, long weight) {
    if (weight < 0 || weight % 2 != 0)
        throw DomainError("basis weight must be even and non-negative, got " +
                          std::to_string(weight));
    MonomialBasis basis{tag, weight, {}};
    switch (tag) {
    case RingTag::QM_GAMMA02:
        // 2a + 2b + 4c = weight over (E2, C, D)
        for (long a = 0; 2 * a <= weight; ++a)
            for (long b = 0; 2 * a + 2 * b <= weight; ++b) {
                long rem = weight - 2 * a - 2 * b;
                if (rem % 4 == 0)
                    basis.exponent_tuples.push_back({a, b, rem / 4});
            }
        break;
    case RingTag::MOD_GAMMA02:
        for (long b = 0; 2 * b <= weight; ++b) {
            long rem = weight - 2 * b;
            if (rem % 4 == 0)
                basis.exponent_tuples.push_back({b, rem / 4});
        }
        break;
    case RingTag::MOD_GAMMA02_STAR: {
        long w = weight % 4 == 2 ? weight - 6 : weight;
        if (w < 0)
            break; // no forms of this weight; empty basis
        // 4a + 8b = w over (C^2, Delta_2A)
        for (long a = 0; 4 * a <= w; ++a) {
            long rem = w - 4 * a;
            if (rem % 8 == 0)
                basis.exponent_tuples.push_back({a, rem / 8});
        }
        break;
    }
    }
    return basis;
}

QSeries basis_monomial(const MonomialBasis& basis, const std::vector<long>& tuple, long prec) {
    QSeries c = get_form(FormName::C, prec);
    QSeries d = get_form(FormName::D, prec);
    switch (basis.ring_tag) {
    case RingTag::QM_GAMMA02: {
        QSeries e2 = get_form(FormName::E2, prec);
        return pow_int(e2, tuple[0]) * pow_int(c, tuple[1]) * pow_int(d, tuple[2]);
    }
    case RingTag::MOD_GAMMA02:
        return pow_int(c, tuple[0]) * pow_int(d, tuple[1]);
    case RingTag::MOD_GAMMA02_STAR: {
        QSeries d2a = get_form(FormName::DELTA_2A, prec);
        QSeries m = pow_int(c * c, tuple[0]) * pow_int(d2a, tuple[1]);
        if (basis.odd_generator())
            m = (pow_int(c, 3) - Rational(128) * (c * d)) * m;
        return m;
    }
    }
    throw DomainError("unknown ring tag");
}

LinearSolveReport exact_linear_solve(const std::vector<std::vector<Rational>>& matrix,
                                     const std::vector<Rational>& rhs) {
    size_t rows = matrix.size();
    size_t cols = rows == 0 ? 0 : matrix[0].size();
    std::vector<std::vector<Rational>> a = matrix;
    std::vector<Rational> b = rhs;

    std::vector<long> pivot_row_of_col(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        // first nonzero entry; no magnitude heuristics, results are exact
        size_t p = row;
        while (p < rows && a[p][col].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < cols; ++j)
            a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero())
                continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (!b[i].is_zero())
            return {SolveStatus::NOT_IN_SPAN, {}};
    for (size_t col = 0; col < cols; ++col)
        if (pivot_row_of_col[col] < 0)
            return {SolveStatus::UNDERDETERMINED, {}};
    std::vector<Rational> x(cols);
    for (size_t col = 0; col < cols; ++col)
        x[col] = b[static_cast<size_t>(pivot_row_of_col[col])];
    return {SolveStatus::UNIQUE, std::move(x)};
}

DecompositionReport decompose(const QSeries& f, const MonomialBasis& basis, long margin) {
    long ncols = static_cast<long>(basis.exponent_tuples.size());
    long nrows = ncols + margin;
    if (f.prec() < nrows)
        throw PrecisionExceeded("decompose needs " + std::to_string(nrows) +
                                " certified coefficients, input has " + std::to_string(f.prec()));
    if (ncols == 0) {
        SolveStatus st =
            f.truncated(nrows).is_zero_to_precision() ? SolveStatus::UNIQUE : SolveStatus::NOT_IN_SPAN;
        return {basis, {}, st, nrows};
    }
    std::vector<std::vector<Rational>> a(static_cast<size_t>(nrows),
                                         std::vector<Rational>(static_cast<size_t>(ncols)));
    for (long j = 0; j < ncols; ++j) {
        QSeries m = basis_monomial(basis, basis.exponent_tuples[static_cast<size_t>(j)], nrows);
        for (long e = 0; e < nrows; ++e)
            a[static_cast<size_t>(e)][static_cast<size_t>(j)] = m.coeff(e);
    }
    std::vector<Rational> rhs(static_cast<size_t>(nrows));
    for (long e = 0; e < nrows; ++e)
        rhs[static_cast<size_t>(e)] = f.coeff(e);
    LinearSolveReport lin = exact_linear_solve(a, rhs);
    return {basis, std::move(lin.solution), lin.status, nrows};
}

QSeries recompose(const DecompositionReport& report, long prec) {
    if (report.status != SolveStatus::UNIQUE)
        throw DomainError("recompose requires a UNIQUE report");
    QSeries acc = QSeries::zero(prec);
    for (size_t j = 0; j < report.basis.exponent_tuples.size(); ++j)
        acc = acc + report.coefficients[j] *
                        basis_monomial(report.basis, report.basis.exponent_tuples[j], prec);
    return acc;
}

} // namespace qmf
