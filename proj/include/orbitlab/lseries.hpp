#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/error.hpp"
#include "orbitlab/matrix.hpp"
#include "orbitlab/mpoly.hpp"
#include "orbitlab/series.hpp"

namespace orbitlab::lseries {

using exact::Domain;
using exact::Matrix;
using exact::MPoly;
using exact::Scalar;
using exact::TruncatedSeries;

/// A weight lambda in Z^n; a partition when non-increasing and non-negative.
using Weight = std::vector<long>;

bool is_dominant(const Weight& lambda);
bool is_partition(const Weight& lambda);
long weight_size(const Weight& lambda);

/// Partitions of exactly `total` with at most `max_parts` nonzero parts,
/// padded with zeros to `length`, in reverse lexicographic order.
std::vector<Weight> partitions(long total, std::size_t length, std::size_t max_parts);

/// h_0..h_K of the given values: h_k = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
template <typename T>
std::vector<T> complete_homogeneous(const std::vector<T>& xs, std::size_t top, const T& sample) {
    std::vector<T> h(top + 1, exact::zero_like(sample));
    h[0] = exact::one_like(sample);
    for (const auto& x : xs) {
        for (std::size_t k = 1; k <= top; ++k) h[k] = h[k] + x * h[k - 1];
    }
    return h;
}

/// Division-free determinant by Laplace expansion along rows, memoised on
/// the set of columns still available.
template <typename T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& sample) {
    const std::size_t n = m.size();
    if (n == 0) return exact::one_like(sample);
    if (n > 20) throw InvalidArgument("determinant too large for Laplace expansion");
    std::map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t free_cols) -> T {
        if (row == n) return exact::one_like(sample);
        if (auto it = memo.find(free_cols); it != memo.end()) return it->second;
        T total = exact::zero_like(sample);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(free_cols & (1U << c))) continue;
            if (!m[row][c].is_zero()) {
                const T term = m[row][c] * self(self, row + 1, free_cols & ~(1U << c));
                total = sign > 0 ? total + term : total - term;
            }
            sign = -sign;
        }
        memo.emplace(free_cols, total);
        return total;
    };
    return rec(rec, 0, (n == 32 ? 0xFFFFFFFFU : (1U << n) - 1));
}

/// s_lambda(xs) by Jacobi-Trudi: det(h_{lambda_i - i + j}) over the nonzero parts.
template <typename T>
T schur(const Weight& lambda, const std::vector<T>& xs, const T& sample) {
    if (lambda.size() != xs.size()) throw ShapeMismatch("partition length differs from number of variables");
    if (!is_partition(lambda)) throw InvalidArgument("schur needs a partition");
    std::size_t len = 0;
    while (len < lambda.size() && lambda[len] > 0) ++len;
    if (len == 0) return exact::one_like(sample);
    const auto top = static_cast<std::size_t>(lambda[0]) + len;
    const auto h = complete_homogeneous(xs, top, sample);
    std::vector<std::vector<T>> jt(len, std::vector<T>(len, exact::zero_like(sample)));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const long k = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
            if (k >= 0) jt[i][j] = h[static_cast<std::size_t>(k)];
        }
    }
    return laplace_determinant(jt, sample);
}

Scalar schur(const Weight& lambda, const std::vector<Scalar>& xs);

/// det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}); xs must be pairwise distinct.
Scalar schur_bialternant(const Weight& lambda, const std::vector<Scalar>& xs);

/// Variables x_1..x_n as polynomials.
std::vector<MPoly> symbolic_variables(std::size_t n, Domain domain = Domain::rational());

/// sum over partitions with lambda_n = 0 and |lambda| <= D of s_lambda(xs) t^{|lambda|}.
/// Degree strata are computed in parallel and stored by degree.
template <typename T>
TruncatedSeries<T> lhs_series(const std::vector<T>& xs, std::size_t n, int degree, unsigned threads = 1);

/// (1 - x_1...x_n t^n) prod_{i<j} (1 - x_i x_j t^2)^{-1} prod_i (1 - x_i t)^{-1}.
template <typename T>
TruncatedSeries<T> rhs_product(const std::vector<T>& xs, std::size_t n, int degree);

/// Both sides with symbolic coefficients in x_1..x_n agree through t^D.
bool verify_identity(std::size_t n, int degree, unsigned threads = 1);

/// Exponent of q in delta_B^{1/2}(varpi^lambda): -sum lambda_i (n + 1 - 2i) / 2.
long delta_half_exponent(const Weight& lambda, std::size_t n);

/// q^{exponent} * value.
struct WhittakerValue {
    long q_exponent = 0;
    Scalar value;

    std::string to_string() const;
};

/// 0 off the dominant cone, else q^{delta_half_exponent} s_lambda(chi), with
/// negative weights handled by s_lambda = e_n^{lambda_n} s_{lambda - lambda_n}.
WhittakerValue whittaker_value(const Weight& lambda, const std::vector<Scalar>& chi);

/// (2p+1) x (2p+1) matrix with b on odd (1-based) indices and a on even ones.
Matrix interleave_embed(const Matrix& a, const Matrix& b);

/// -sum (lambda_i - lambda_j) over strictly upper positions (i, j) that the
/// interleaved embedding can fill.
long modular_exponent_PH(const Weight& lambda, std::size_t p);

/// Behaviour at t = 1 of
/// (1 - x_1...x_n t^n) / (prod_i (1 - x_i t) prod_{i<j} (1 - x_i x_j t^2))
/// when x_1...x_n = 1. The expression is c (1 - t)^{-order} + ... .
struct PoleAnalysis {
    int order = 0;
    Scalar leading;              // c
    std::optional<Scalar> limit; // value at t = 1 when order <= 0
    std::size_t unit_values = 0;     // #{i : x_i = 1}
    std::size_t vanishing_pairs = 0; // #{i < j : x_i x_j = 1}
};

PoleAnalysis pole_order_at_one(const std::vector<Scalar>& xs, std::size_t p);

extern template TruncatedSeries<Scalar> lhs_series(const std::vector<Scalar>&, std::size_t, int, unsigned);
extern template TruncatedSeries<MPoly> lhs_series(const std::vector<MPoly>&, std::size_t, int, unsigned);
extern template TruncatedSeries<Scalar> rhs_product(const std::vector<Scalar>&, std::size_t, int);
extern template TruncatedSeries<MPoly> rhs_product(const std::vector<MPoly>&, std::size_t, int);

}  // namespace orbitlab::lseries
