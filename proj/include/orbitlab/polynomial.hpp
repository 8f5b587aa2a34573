#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/scalar.hpp"

namespace orbitlab::exact {

/// Univariate polynomial over one exact domain, lowest degree first, with
/// no trailing zero coefficients.
class Polynomial {
public:
    explicit Polynomial(Domain domain = Domain::rational()) : domain_(domain) {}
    Polynomial(std::vector<Scalar> coeffs, Domain domain);
    static Polynomial from_ints(std::vector<long> coeffs, Domain domain = Domain::rational());
    static Polynomial monomial(Scalar c, std::size_t degree);

    const Domain& domain() const { return domain_; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coefficient(std::size_t k) const;
    Scalar leading() const;

    Polynomial derivative() const;
    Polynomial monic() const;
    Scalar evaluate(const Scalar& x) const;
    Matrix evaluate(const Matrix& m) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Quotient and remainder; throws on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    bool divides(const Polynomial& other) const;

    std::string to_string() const;

private:
    void normalize();

    Domain domain_;
    std::vector<Scalar> coeffs_;
};

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// True iff gcd(f, f') is a unit. Requires f nonzero and, over F_l,
/// l > deg f so that the derivative test is sound.
bool is_squarefree(const Polynomial& f);

}  // namespace orbitlab::exact
