#include "coartin/linalg.hpp"

namespace coartin {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].isZero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Scalar inv = rows[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].isZero()) continue;
            const Scalar f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix rows, const FieldSpec&) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    return rref(rows, cols).size();
}

std::optional<std::vector<Scalar>> solve(const Matrix& M, const std::vector<Scalar>& rhs, const FieldSpec& field) {
    if (M.size() != rhs.size()) throw ValidationError("solve: row count does not match right-hand side");
    const std::size_t n = M.empty() ? 0 : M.front().size();
    Matrix aug = M;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != n) throw ValidationError("solve: ragged matrix");
        aug[i].push_back(rhs[i]);
    }
    const auto pivots = rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Scalar> x(n, field.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
    return x;
}

Matrix identity(std::size_t n, const FieldSpec& field) {
    Matrix I(n, std::vector<Scalar>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = field.one();
    return I;
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldSpec& field) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.empty() ? 0 : b.front().size();
    Matrix c(n, std::vector<Scalar>(m, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].isZero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

}  // namespace coartin
