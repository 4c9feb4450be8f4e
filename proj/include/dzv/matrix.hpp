#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dzv/symbols.hpp"

namespace dzv {

struct RationalMatrix {
    std::vector<Symbol> column_basis;  // may be empty for anonymous columns
    std::vector<std::vector<Rational>> rows;
    std::size_t ncols = 0;

    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t cols) : ncols(cols) {}
    explicit RationalMatrix(std::vector<Symbol> basis)
        : column_basis(std::move(basis)), ncols(column_basis.size()) {}

    std::size_t nrows() const { return rows.size(); }

    void add_row(std::vector<Rational> row) {
        if (row.size() != ncols) throw std::invalid_argument("RationalMatrix: row length mismatch");
        rows.push_back(std::move(row));
    }

    // coefficient vector of f over column_basis; rejects symbols outside it
    void add_row(const FormalSum& f) {
        std::vector<Rational> row(ncols);
        for (const auto& [s, c] : f.terms()) {
            std::size_t idx = 0;
            while (idx < ncols && !(column_basis[idx] == s)) ++idx;
            if (idx == ncols) throw std::invalid_argument("RationalMatrix: symbol not in column basis");
            row[idx] = c;
        }
        rows.push_back(std::move(row));
    }
};

// Gauss-Jordan elimination; returns the reduced matrix and pivot column indices.
inline std::pair<RationalMatrix, std::vector<std::size_t>> rref(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.ncols && lead < m.nrows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.nrows() && m.rows[piv][col] == 0) ++piv;
        if (piv == m.nrows()) continue;
        std::swap(m.rows[lead], m.rows[piv]);
        Rational inv = m.rows[lead][col];
        for (auto& x : m.rows[lead]) x = Rational(x / inv);
        for (std::size_t r = 0; r < m.nrows(); ++r) {
            if (r == lead || m.rows[r][col] == 0) continue;
            Rational f = m.rows[r][col];
            for (std::size_t c = 0; c < m.ncols; ++c)
                m.rows[r][c] = Rational(m.rows[r][c] - f * m.rows[lead][c]);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).second.size(); }

// Basis of {v : m v = 0}, each vector scaled so its first nonzero entry is 1.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = Rational(-red.rows[r][free]);
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) {
            Rational lead = v[first];
            for (auto& x : v) x = Rational(x / lead);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Coefficients y with  y^T rows = target, or nullopt; free coordinates are 0.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                                  const std::vector<Rational>& target) {
    if (target.size() != m.ncols) throw std::invalid_argument("solve: target length mismatch");
    // eliminate on the transposed system: ncols equations in nrows unknowns
    std::size_t n = m.nrows();
    std::vector<std::vector<Rational>> aug(m.ncols, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m.ncols; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m.rows[j][i];
        aug[i][n] = target[i];
    }
    std::vector<std::size_t> pivot_of_col;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < n && lead < aug.size(); ++col) {
        std::size_t piv = lead;
        while (piv < aug.size() && aug[piv][col] == 0) ++piv;
        if (piv == aug.size()) continue;
        std::swap(aug[lead], aug[piv]);
        Rational inv = aug[lead][col];
        for (auto& x : aug[lead]) x = Rational(x / inv);
        for (std::size_t r = 0; r < aug.size(); ++r) {
            if (r == lead || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (std::size_t c = 0; c <= n; ++c) aug[r][c] = Rational(aug[r][c] - f * aug[lead][c]);
        }
        pivot_of_col.push_back(col);
        ++lead;
    }
    for (std::size_t r = lead; r < aug.size(); ++r)
        if (aug[r][n] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> y(n);
    for (std::size_t r = 0; r < pivot_of_col.size(); ++r) y[pivot_of_col[r]] = aug[r][n];
    return y;
}

}  // namespace dzv
