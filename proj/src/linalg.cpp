#include "orbitlab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "orbitlab/error.hpp"

namespace orbitlab::exact {

namespace {

using IntRow = std::vector<mpz_class>;

void reduce_content(IntRow& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

// Rational rows scaled to primitive integer rows, then eliminated with
// r_i <- a_rc r_i - a_ic r_r followed by content reduction.
Echelon echelon_fraction_free(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<IntRow> a(rows, IntRow(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const auto q = m(i, j).to_rational();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const auto q = m(i, j).to_rational();
            a[i][j] = q.get_num() * (lcm / q.get_den());
        }
        reduce_content(a[i]);
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpz_class f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (a[r][j] == 0) {
                    if (a[i][j] != 0) a[i][j] *= piv;
                    continue;
                }
                a[i][j] = piv * a[i][j] - f * a[r][j];
            }
            reduce_content(a[i]);
        }
        pivots.push_back(c);
        ++r;
    }

    Matrix reduced(pivots.size(), cols, m.domain());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& piv = a[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j) {
            if (a[i][j] != 0) reduced.set(i, j, Scalar(mpq_class(a[i][j], piv)));
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

Echelon echelon_field(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Vector> a;
    a.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) a.push_back(m.row(i));

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(pivots.size());
    return {Matrix::from_row_vectors(a, cols, m.domain()), std::move(pivots)};
}

}  // namespace

Echelon echelon(const Matrix& m, Elimination how) {
    if (how == Elimination::FractionFree && m.domain().kind() == DomainKind::Rational) {
        return echelon_fraction_free(m);
    }
    return echelon_field(m);
}

std::size_t rank(const Matrix& m, Elimination how) { return echelon(m, how).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m, Elimination how) {
    const Echelon e = echelon(m, how);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), Scalar::zero(m.domain()));
        v[free] = Scalar::one(m.domain());
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Vector> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
    Scalar det = Scalar::one(m.domain());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Scalar::zero(m.domain());
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Scalar inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const Scalar f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix aug(n, 2 * n, m.domain());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
        aug.set(i, n + i, 1);
    }
    const Echelon e = echelon(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    std::vector<std::size_t> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), n);
    return e.reduced.submatrix(rows, cols);
}

Matrix solve_in_span(const Matrix& basis, const Matrix& targets) {
    if (basis.rows() != targets.rows()) throw ShapeMismatch("basis and targets differ in length");
    const std::size_t r = basis.cols();
    const std::size_t s = targets.cols();
    Matrix aug(basis.rows(), r + s, basis.domain());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < r; ++j) aug.set(i, j, basis(i, j));
        for (std::size_t j = 0; j < s; ++j) aug.set(i, r + j, targets(i, j));
    }
    const Echelon e = echelon(aug);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.pivots[i] != i) {
            throw InvalidArgument(e.pivots[i] < r ? "basis vectors are dependent"
                                                  : "target lies outside the span");
        }
    }
    if (e.rank() != r) throw InvalidArgument("basis vectors are dependent");
    Matrix coords(r, s, basis.domain());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) coords.set(i, j, e.reduced(i, r + j));
    }
    return coords;
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const Domain& d = m.domain();
    if (n == 0) return Polynomial::from_ints({1}, d);

    // Descending coefficients of det(t - A_k) for the trailing block A_k.
    Vector vec{Scalar::one(d), -m(n - 1, n - 1)};
    for (std::size_t k = n - 1; k-- > 0;) {
        const std::size_t sz = n - 1 - k;
        Vector column(sz), row(sz);
        for (std::size_t i = 0; i < sz; ++i) {
            column[i] = m(k + 1 + i, k);
            row[i] = m(k, k + 1 + i);
        }
        Vector toeplitz{Scalar::one(d), -m(k, k)};
        Vector power = column;  // A1^j C
        for (std::size_t j = 0; j < sz; ++j) {
            Scalar dot = Scalar::zero(d);
            for (std::size_t i = 0; i < sz; ++i) dot += row[i] * power[i];
            toeplitz.push_back(-dot);
            if (j + 1 < sz) {
                Vector next(sz, Scalar::zero(d));
                for (std::size_t i = 0; i < sz; ++i) {
                    for (std::size_t l = 0; l < sz; ++l) next[i] += m(k + 1 + i, k + 1 + l) * power[l];
                }
                power = std::move(next);
            }
        }
        Vector next(sz + 2, Scalar::zero(d));
        for (std::size_t i = 0; i < sz + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, sz); ++j) next[i] += toeplitz[i - j] * vec[j];
        }
        vec = std::move(next);
    }
    std::reverse(vec.begin(), vec.end());
    return Polynomial(std::move(vec), d);
}

Polynomial minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("minimal polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const Domain& d = m.domain();
    std::vector<Vector> powers{Matrix::identity(n, d).vectorize()};
    Matrix current = Matrix::identity(n, d);
    for (std::size_t k = 1; k <= n; ++k) {
        current = current * m;
        powers.push_back(current.vectorize());
        auto kernel = kernel_basis(Matrix::from_columns(powers, n * n, d));
        if (kernel.empty()) continue;
        // Lower powers are independent, so the kernel is one-dimensional with
        // a nonzero top coefficient.
        Vector coeffs = kernel.front();
        Scalar lead_inv = coeffs.back().inverse();
        for (auto& c : coeffs) c *= lead_inv;
        return Polynomial(std::move(coeffs), d);
    }
    if (n == 0) return Polynomial::from_ints({1}, d);
    throw InternalInconsistency("no annihilating polynomial of degree <= n");
}

std::size_t subspace_sum_dim(std::span<const Vector> a, std::span<const Vector> b) {
    if (a.empty() && b.empty()) return 0;
    const Vector& first = a.empty() ? b.front() : a.front();
    const std::size_t len = first.size();
    const Domain d = len == 0 ? Domain::rational() : first.front().domain();
    std::vector<Vector> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    for (const auto& v : all) {
        if (v.size() != len) throw ShapeMismatch("vectors of different lengths");
    }
    if (len == 0) return 0;
    return rank(Matrix::from_row_vectors(all, len, d));
}

}  // namespace orbitlab::exact
