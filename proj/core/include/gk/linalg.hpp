#pragma once

#include "gk/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

// Dense linear algebra over Q. Matrices here are tiny (Picard lattices,
// degree slices of Stanley-Reisner rings), so plain Gaussian elimination is enough.
namespace gk::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major

/// Reduced row echelon form. Zero rows are dropped; pivots[i] is the pivot column of rows[i].
struct Echelon {
    Matrix rows;
    std::vector<std::size_t> pivots;
    std::size_t columns = 0;

    /// v minus the combination of rows that clears every pivot column of v.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
};

Echelon row_reduce(Matrix m, std::size_t columns);
std::size_t rank(const Matrix& m, std::size_t columns);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Some solution x of a*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

Matrix transpose(const Matrix& m, std::size_t columns);

} // namespace gk::linalg
