#include "orbitlab/matrix.hpp"

#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab::exact {

namespace {

void require_same_domain(const Domain& a, const Domain& b) {
    if (!(a == b)) {
        throw DomainMismatch("matrix domains differ: " + a.to_string() + " vs " + b.to_string());
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Domain domain)
    : rows_(rows), cols_(cols), domain_(domain), data_(rows * cols, Scalar::zero(domain)) {}

Matrix Matrix::identity(std::size_t n, Domain domain) {
    Matrix m(n, n, domain);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> entries,
                         Domain domain) {
    if (entries.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
    Matrix m(rows, cols, domain);
    std::size_t k = 0;
    for (long v : entries) {
        m.data_[k++] = Scalar::from_int(domain, v);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows, Domain domain) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, domain);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t length, Domain domain) {
    Matrix m(length, columns.size(), domain);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != length) throw ShapeMismatch("column length mismatch");
        for (std::size_t i = 0; i < length; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

Matrix Matrix::from_row_vectors(std::span<const Vector> rows, std::size_t length, Domain domain) {
    Matrix m(rows.size(), length, domain);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != length) throw ShapeMismatch("vector length mismatch");
        for (std::size_t j = 0; j < length; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    require_same_domain(domain_, value.domain());
    data_[i * cols_ + j] = std::move(value);
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_),
                  data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, domain_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    }
    return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size(), domain_);
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (row_idx[i] >= rows_ || col_idx[j] >= cols_) throw ShapeMismatch("index out of range");
            s.data_[i * s.cols_ + j] = (*this)(row_idx[i], col_idx[j]);
        }
    }
    return s;
}

Matrix Matrix::power(unsigned k) const {
    if (!is_square()) throw ShapeMismatch("power of a non-square matrix");
    Matrix result = identity(rows_, domain_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vector Matrix::vectorize() const { return data_; }

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& s : r.data_) s = -s;
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_domain(a.domain_, b.domain_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("sum of differently shaped matrices");
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_domain(a.domain_, b.domain_);
    if (a.cols_ != b.rows_) throw ShapeMismatch("product of incompatible shapes");
    Matrix r(a.rows_, b.cols_, a.domain_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                r.data_[i * r.cols_ + j] += aik * bkj;
            }
        }
    }
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    require_same_domain(s.domain(), a.domain_);
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (v.size() != a.cols_) throw ShapeMismatch("matrix-vector length mismatch");
    Vector out(a.rows_, Scalar::zero(a.domain_));
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a(i, j).is_zero()) continue;
            out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.domain_ == b.domain_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace orbitlab::exact
