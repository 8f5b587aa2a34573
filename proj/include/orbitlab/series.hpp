#pragma once

#include <vector>

#include "orbitlab/error.hpp"
#include "orbitlab/mpoly.hpp"
#include "orbitlab/scalar.hpp"

namespace orbitlab::exact {

// Additive and multiplicative identities shaped like a sample element, so
// generic code can work over Scalar and MPoly alike.
inline Scalar zero_like(const Scalar& s) { return Scalar::zero(s.domain()); }
inline Scalar one_like(const Scalar& s) { return Scalar::one(s.domain()); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.nvars(), p.domain()); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.nvars(), Scalar::one(p.domain())); }

/// Power series in t modulo t^{D+1}, coefficients c_0..c_D.
template <typename T>
class TruncatedSeries {
public:
    TruncatedSeries(int degree, const T& sample) : degree_(degree) {
        if (degree < 0) throw InvalidArgument("truncation degree must be non-negative");
        coeffs_.assign(static_cast<std::size_t>(degree) + 1, zero_like(sample));
    }
    static TruncatedSeries one(int degree, const T& sample) {
        TruncatedSeries s(degree, sample);
        s.coeffs_[0] = one_like(sample);
        return s;
    }
    /// (1 - a t^k)^{-1} = sum_m a^m t^{km}.
    static TruncatedSeries geometric(int degree, const T& a, int k) {
        TruncatedSeries s = one(degree, a);
        T power = one_like(a);
        for (int d = k; d <= degree; d += k) {
            power = power * a;
            s.coeffs_[static_cast<std::size_t>(d)] = power;
        }
        return s;
    }
    /// 1 - a t^k.
    static TruncatedSeries binomial(int degree, const T& a, int k) {
        TruncatedSeries s = one(degree, a);
        if (k <= degree) s.coeffs_[static_cast<std::size_t>(k)] = zero_like(a) - a;
        return s;
    }

    int degree() const { return degree_; }
    const T& operator[](std::size_t k) const { return coeffs_.at(k); }
    T& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<T>& coefficients() const { return coeffs_; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a.check(b);
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.degree_, a.coeffs_[0]);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check(const TruncatedSeries& o) const {
        if (degree_ != o.degree_) throw ShapeMismatch("series truncated at different degrees");
    }

    int degree_;
    std::vector<T> coeffs_;
};

}  // namespace orbitlab::exact
