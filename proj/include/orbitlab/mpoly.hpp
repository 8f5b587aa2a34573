#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitlab/scalar.hpp"

namespace orbitlab::exact {

/// Polynomial in x_1..x_n with coefficients in one exact domain, stored as a
/// map from exponent vectors to nonzero coefficients.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;

    MPoly() = default;
    MPoly(std::size_t nvars, Domain domain) : nvars_(nvars), domain_(domain) {}
    static MPoly constant(std::size_t nvars, const Scalar& c);
    /// x_{index+1}
    static MPoly variable(std::size_t nvars, std::size_t index, Domain domain = Domain::rational());

    std::size_t nvars() const { return nvars_; }
    const Domain& domain() const { return domain_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar evaluate(const std::vector<Scalar>& point) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) = default;

    /// Terms by descending total degree, then descending exponents:
    /// "x1^2*x2 - 3/2*x3 + 1".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Scalar& c);
    void check_same(const MPoly& o) const;

    std::size_t nvars_ = 0;
    Domain domain_;
    std::map<Exponents, Scalar> terms_;
};

}  // namespace orbitlab::exact
