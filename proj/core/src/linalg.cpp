#include "gk/linalg.hpp"

#include <utility>

namespace gk::linalg {

Echelon row_reduce(Matrix m, std::size_t columns)
{
    Echelon e;
    e.columns = columns;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && is_zero(m[pick][col]))
            ++pick;
        if (pick == m.size())
            continue;
        std::swap(m[row], m[pick]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col]))
                continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < columns; ++c)
                m[r][c] -= f * m[row][c];
        }
        e.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

Vector Echelon::reduce(Vector v) const
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational f = v[pivots[i]];
        if (is_zero(f))
            continue;
        for (std::size_t c = 0; c < columns; ++c)
            v[c] -= f * rows[i][c];
    }
    return v;
}

bool Echelon::contains(const Vector& v) const
{
    for (const auto& x : reduce(v))
        if (!is_zero(x))
            return false;
    return true;
}

std::size_t rank(const Matrix& m, std::size_t columns)
{
    return row_reduce(m, columns).rows.size();
}

Rational determinant(Matrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pick = col;
        while (pick < n && is_zero(m[pick][col]))
            ++pick;
        if (pick == n)
            return 0;
        if (pick != col) {
            std::swap(m[pick], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col]))
                continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    const std::size_t n = m.size();
    Matrix aug(n, Vector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const Echelon e = row_reduce(std::move(aug), 2 * n);
    if (e.rows.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = e.rows[i][n + j];
    return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    Matrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    const Echelon e = row_reduce(std::move(aug), cols + 1);
    Vector x(cols);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols)
            return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

Matrix transpose(const Matrix& m, std::size_t columns)
{
    Matrix t(columns, Vector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < columns; ++j)
            t[j][i] = m[i][j];
    return t;
}

} // namespace gk::linalg
