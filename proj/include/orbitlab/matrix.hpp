#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbitlab/scalar.hpp"

namespace orbitlab::exact {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix whose entries all live in one exact domain.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Domain domain = Domain::rational());

    static Matrix identity(std::size_t n, Domain domain = Domain::rational());
    static Matrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> entries,
                            Domain domain = Domain::rational());
    static Matrix from_rows(const std::vector<std::vector<long>>& rows,
                            Domain domain = Domain::rational());
    /// Columns of the result are the given vectors.
    static Matrix from_columns(std::span<const Vector> columns, std::size_t length, Domain domain);
    static Matrix from_row_vectors(std::span<const Vector> rows, std::size_t length, Domain domain);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Domain& domain() const { return domain_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    /// Writes one entry; the value must belong to the matrix domain.
    void set(std::size_t i, std::size_t j, Scalar value);
    void set(std::size_t i, std::size_t j, long value) { set(i, j, Scalar::from_int(domain_, value)); }

    std::span<const Scalar> entries() const { return data_; }
    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    /// Rows and columns picked by index lists, in the given order.
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    Matrix power(unsigned k) const;
    bool is_zero() const;
    /// Row-major flattening.
    Vector vectorize() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Domain domain_;
    std::vector<Scalar> data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace orbitlab::exact
