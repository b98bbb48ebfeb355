#pragma once

#include <vector>

#include "cnls/coeff.hpp"

namespace cnls {

using CoeffVec = std::vector<Coeff>;
using CoeffMat = std::vector<CoeffVec>;

// Exact Gaussian elimination over the coefficient field. Pivots on rational
// nonzero entries when possible; a symbolic pivot is assumed nonzero
// generically and its numerator is recorded as a side condition.
struct Elimination {
    CoeffMat rows;                      // reduced row-echelon form, zero rows dropped
    std::vector<int> pivot_cols;
    std::vector<std::string> side_conditions;

    int rank() const { return static_cast<int>(rows.size()); }
};

inline Elimination row_reduce(CoeffMat m) {
    Elimination out;
    if (m.empty()) return out;
    std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pick = m.size();
        for (std::size_t r = row; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            if (m[r][col].is_rational()) {
                pick = r;
                break;
            }
            if (pick == m.size()) pick = r;
        }
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        Coeff pivot = m[row][col];
        if (!pivot.is_rational()) {
            std::string cond = detail::render_poly(pivot.num());
            bool seen = false;
            for (auto& s : out.side_conditions) seen = seen || s == cond;
            if (!seen) out.side_conditions.push_back(cond);
        }
        Coeff inv = pivot.inverse();
        for (std::size_t c = col; c < ncols; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Coeff factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

// Solve A x = b (columns of A are the unknowns' coordinate vectors). When the
// system is inconsistent, `consistent` is false and x holds the pivot-column
// solution with free unknowns zero, so callers can form a residual.
struct SolveResult {
    bool consistent = true;
    CoeffVec x;
    std::vector<std::string> side_conditions;
};

inline SolveResult solve_exact(const CoeffMat& a, const CoeffVec& b) {
    std::size_t nrows = a.size();
    std::size_t nunknowns = nrows == 0 ? 0 : a[0].size();
    CoeffMat aug(nrows, CoeffVec(nunknowns + 1));
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < nunknowns; ++c) aug[r][c] = a[r][c];
        aug[r][nunknowns] = b[r];
    }
    Elimination e = row_reduce(std::move(aug));
    SolveResult out;
    out.side_conditions = e.side_conditions;
    out.x.assign(nunknowns, Coeff(Rational(0)));
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == static_cast<int>(nunknowns)) {
            out.consistent = false; // pivot in the constant column
            continue;
        }
        out.x[e.pivot_cols[i]] = e.rows[i][nunknowns];
    }
    return out;
}

// Basis of the null space of A (right kernel).
inline CoeffMat kernel_basis(const CoeffMat& a) {
    if (a.empty()) return {};
    std::size_t n = a[0].size();
    Elimination e = row_reduce(a);
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    CoeffMat out;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        CoeffVec v(n, Coeff(Rational(0)));
        v[free_col] = Coeff(Rational(1));
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rows[i][free_col];
        out.push_back(std::move(v));
    }
    return out;
}

inline CoeffMat transpose(const CoeffMat& a) {
    if (a.empty()) return {};
    CoeffMat out(a[0].size(), CoeffVec(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[0].size(); ++c) out[c][r] = a[r][c];
    return out;
}

} // namespace cnls
