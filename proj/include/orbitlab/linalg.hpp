#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/polynomial.hpp"

namespace orbitlab::exact {

enum class Elimination {
    /// Integer rows with content reduction (rationals); other domains fall
    /// back to field elimination, which has no coefficient growth there.
    FractionFree,
    /// Textbook Gauss-Jordan over the field.
    Field,
};

/// Reduced row echelon form: unique, so both strategies must agree on it.
struct Echelon {
    Matrix reduced;                     // rank() nonzero rows, pivots equal to one
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Matrix& m, Elimination how = Elimination::FractionFree);

std::size_t rank(const Matrix& m, Elimination how = Elimination::FractionFree);

/// Basis of the right null space, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m, Elimination how = Elimination::FractionFree);

Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Coordinates of each column of `targets` in the basis given by the
/// (independent) columns of `basis`; throws if some target is outside the span.
Matrix solve_in_span(const Matrix& basis, const Matrix& targets);

/// det(t - M), division-free (Berkowitz).
Polynomial characteristic_polynomial(const Matrix& m);

/// Monic annihilating polynomial of least degree, from the first linear
/// dependency among I, M, M^2, ...
Polynomial minimal_polynomial(const Matrix& m);

/// dim(span A + span B) for vectors of one common length.
std::size_t subspace_sum_dim(std::span<const Vector> a, std::span<const Vector> b);

}  // namespace orbitlab::exact
