#include "orbitlab/lseries.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "orbitlab/linalg.hpp"
#include "orbitlab/parallel.hpp"

namespace orbitlab::lseries {

bool is_dominant(const Weight& lambda) {
    return std::is_sorted(lambda.begin(), lambda.end(), std::greater<>());
}

bool is_partition(const Weight& lambda) {
    return is_dominant(lambda) && (lambda.empty() || lambda.back() >= 0);
}

long weight_size(const Weight& lambda) {
    long s = 0;
    for (long v : lambda) s += v;
    return s;
}

std::vector<Weight> partitions(long total, std::size_t length, std::size_t max_parts) {
    std::vector<Weight> out;
    if (total < 0) return out;
    max_parts = std::min(max_parts, length);
    Weight current;
    std::function<void(long, long)> rec = [&](long remaining, long cap) {
        if (remaining == 0) {
            Weight w = current;
            w.resize(length, 0);
            out.push_back(std::move(w));
            return;
        }
        if (current.size() == max_parts) return;
        for (long part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(total, total);
    return out;
}

Scalar schur(const Weight& lambda, const std::vector<Scalar>& xs) {
    if (xs.empty()) {
        if (!lambda.empty()) throw ShapeMismatch("partition length differs from number of variables");
        return Scalar::one(Domain::rational());
    }
    return schur(lambda, xs, xs.front());
}

Scalar schur_bialternant(const Weight& lambda, const std::vector<Scalar>& xs) {
    const std::size_t n = xs.size();
    if (lambda.size() != n) throw ShapeMismatch("partition length differs from number of variables");
    if (!is_partition(lambda)) throw InvalidArgument("bialternant needs a partition");
    if (n == 0) return Scalar::one(Domain::rational());
    const Domain d = xs.front().domain();
    Matrix num(n, n, d), den(n, n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long shift = static_cast<long>(n - 1 - j);
            num.set(i, j, xs[i].pow(lambda[j] + shift));
            den.set(i, j, xs[i].pow(shift));
        }
    }
    const Scalar vandermonde = exact::determinant(den);
    if (vandermonde.is_zero()) throw InvalidArgument("bialternant needs pairwise distinct values");
    return exact::determinant(num) / vandermonde;
}

std::vector<MPoly> symbolic_variables(std::size_t n, Domain domain) {
    std::vector<MPoly> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(MPoly::variable(n, i, domain));
    return xs;
}

namespace {

template <typename T>
T sample_of(const std::vector<T>& xs) {
    if (xs.empty()) throw InvalidArgument("need at least one variable");
    return xs.front();
}

}  // namespace

template <typename T>
TruncatedSeries<T> lhs_series(const std::vector<T>& xs, std::size_t n, int degree, unsigned threads) {
    if (xs.size() != n) throw ShapeMismatch("need exactly n character values");
    const T sample = sample_of(xs);
    TruncatedSeries<T> series(degree, sample);
    // One slot per degree; each stratum sums its partitions in a fixed order.
    parallel_for(static_cast<std::size_t>(degree) + 1, threads, [&](std::size_t k) {
        T total = exact::zero_like(sample);
        for (const auto& lambda : partitions(static_cast<long>(k), n, n - 1)) {
            total = total + schur(lambda, xs, sample);
        }
        series[k] = std::move(total);
    });
    return series;
}

template <typename T>
TruncatedSeries<T> rhs_product(const std::vector<T>& xs, std::size_t n, int degree) {
    if (xs.size() != n) throw ShapeMismatch("need exactly n character values");
    if (n % 2 == 0) throw InvalidArgument("the product identity needs n odd");
    const T sample = sample_of(xs);
    T all = exact::one_like(sample);
    for (const auto& x : xs) all = all * x;
    auto result = TruncatedSeries<T>::binomial(degree, all, static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            result = result * TruncatedSeries<T>::geometric(degree, xs[i] * xs[j], 2);
        }
    }
    for (const auto& x : xs) result = result * TruncatedSeries<T>::geometric(degree, x, 1);
    return result;
}

template TruncatedSeries<Scalar> lhs_series(const std::vector<Scalar>&, std::size_t, int, unsigned);
template TruncatedSeries<MPoly> lhs_series(const std::vector<MPoly>&, std::size_t, int, unsigned);
template TruncatedSeries<Scalar> rhs_product(const std::vector<Scalar>&, std::size_t, int);
template TruncatedSeries<MPoly> rhs_product(const std::vector<MPoly>&, std::size_t, int);

bool verify_identity(std::size_t n, int degree, unsigned threads) {
    const auto xs = symbolic_variables(n);
    return lhs_series(xs, n, degree, threads) == rhs_product(xs, n, degree);
}

long delta_half_exponent(const Weight& lambda, std::size_t n) {
    if (lambda.size() != n) throw ShapeMismatch("weight length differs from n");
    long twice = 0;
    for (std::size_t i = 0; i < n; ++i) {
        twice -= lambda[i] * (static_cast<long>(n) + 1 - 2 * static_cast<long>(i + 1));
    }
    if (twice % 2 != 0) throw InvalidArgument("modular character exponent is not integral");
    return twice / 2;
}

std::string WhittakerValue::to_string() const {
    std::ostringstream os;
    if (value.is_zero()) return "0";
    os << "q^" << q_exponent << " * (" << value << ')';
    return os.str();
}

WhittakerValue whittaker_value(const Weight& lambda, const std::vector<Scalar>& chi) {
    if (lambda.size() != chi.size()) throw ShapeMismatch("weight length differs from number of characters");
    if (chi.empty()) throw InvalidArgument("need at least one character value");
    const Domain d = chi.front().domain();
    if (!is_dominant(lambda)) return {0, Scalar::zero(d)};

    const long shift = lambda.back();
    Weight reduced = lambda;
    for (auto& v : reduced) v -= shift;
    Scalar value = schur(reduced, chi);
    if (shift != 0) {
        Scalar det = Scalar::one(d);
        for (const auto& c : chi) det *= c;
        value *= det.pow(shift);
    }
    return {delta_half_exponent(lambda, lambda.size()), value};
}

Matrix interleave_embed(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || b.rows() != a.rows() + 1) {
        throw ShapeMismatch("interleaving needs a p x p and a (p+1) x (p+1) matrix");
    }
    if (!(a.domain() == b.domain())) throw DomainMismatch("blocks live in different domains");
    const std::size_t n = a.rows() + b.rows();
    Matrix c(n, n, a.domain());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // 0-based even index = 1-based odd index 2s-1.
            if (i % 2 == 0 && j % 2 == 0) c.set(i, j, b(i / 2, j / 2));
            if (i % 2 == 1 && j % 2 == 1) c.set(i, j, a(i / 2, j / 2));
        }
    }
    return c;
}

long modular_exponent_PH(const Weight& lambda, std::size_t p) {
    const std::size_t n = 2 * p + 1;
    if (lambda.size() != n) throw ShapeMismatch("weight length must be 2p + 1");
    if (lambda.back() != 0) throw InvalidArgument("need lambda_n = 0 for the torus element to lie in P");
    // Entry pattern of the embedded group: embed all-ones blocks.
    const Domain q = Domain::rational();
    Matrix ones_a(p, p, q), ones_b(p + 1, p + 1, q);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) ones_a.set(i, j, 1);
    }
    for (std::size_t i = 0; i <= p; ++i) {
        for (std::size_t j = 0; j <= p; ++j) ones_b.set(i, j, 1);
    }
    const Matrix pattern = interleave_embed(ones_a, ones_b);
    long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!pattern(i, j).is_zero()) total += lambda[i] - lambda[j];
        }
    }
    return -total;
}

PoleAnalysis pole_order_at_one(const std::vector<Scalar>& xs, std::size_t p) {
    const std::size_t n = 2 * p + 1;
    if (xs.size() != n) throw ShapeMismatch("need 2p + 1 character values");
    const Domain d = xs.front().domain();
    const Scalar one = Scalar::one(d);
    Scalar product = one;
    for (const auto& x : xs) product *= x;
    if (!(product == one)) throw InvalidArgument("pole analysis needs prod x_i = 1");

    PoleAnalysis r;
    // Numerator 1 - t^n = (1 - t)(1 + ... + t^{n-1}) -> n at t = 1.
    // A factor 1 - t contributes (1 - t); 1 - t^2 contributes 2 (1 - t).
    Scalar leading = Scalar::from_int(d, static_cast<long>(n));
    const Scalar two = one + one;
    for (const auto& x : xs) {
        if (x == one) {
            ++r.unit_values;
        } else {
            leading /= one - x;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar xx = xs[i] * xs[j];
            if (xx == one) {
                ++r.vanishing_pairs;
                leading /= two;
            } else {
                leading /= one - xx;
            }
        }
    }
    r.order = static_cast<int>(r.unit_values + r.vanishing_pairs) - 1;
    r.leading = leading;
    if (r.order == 0) r.limit = leading;
    if (r.order < 0) r.limit = Scalar::zero(d);
    return r;
}

}  // namespace orbitlab::lseries
