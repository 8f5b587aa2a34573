#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbitlab::exact {

enum class DomainKind { Rational, PrimeField, Cyclotomic };

/// Tag of an exact scalar domain: the rationals, a prime field F_l, or the
/// cyclotomic field Q(zeta_m) realised as Q[t]/Phi_m(t).
class Domain {
public:
    Domain() = default;

    static Domain rational() { return Domain{}; }
    static Domain prime_field(std::uint64_t ell);
    static Domain cyclotomic(std::uint32_t m);

    /// Accepts "Q", "Fp:<l>" and "Cyc:<m>".
    static Domain parse(std::string_view text);

    DomainKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t characteristic() const { return kind_ == DomainKind::PrimeField ? modulus_ : 0; }

    /// Degree of the cyclotomic extension (phi(m)); 1 for the other kinds.
    std::size_t extension_degree() const;

    std::string to_string() const;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    Domain(DomainKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    DomainKind kind_ = DomainKind::Rational;
    std::uint64_t modulus_ = 0;
};

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint32_t m);

/// An element of one exact domain, always held in canonical form: reduced
/// fraction, residue in [0, l), or polynomial residue of degree < phi(m).
/// Arithmetic between different domains throws DomainMismatch.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    Scalar(long v) : value_(mpq_class(v)) {}  // NOLINT: integers promote to Q
    explicit Scalar(mpq_class v);

    static Scalar zero(const Domain& d);
    static Scalar one(const Domain& d);
    static Scalar from_int(const Domain& d, long v);
    static Scalar from_rational(const Domain& d, const mpq_class& v);
    /// zeta_m^j in Cyc:m.
    static Scalar root_of_unity(std::uint32_t m, long j);

    /// Parses the canonical text forms "a/b" (or "a"), "res", "c0,c1,...",
    /// and additionally "zeta:m:j" for cyclotomic domains.
    static Scalar parse(const Domain& d, std::string_view text);

    const Domain& domain() const { return domain_; }

    bool is_zero() const;
    bool is_one() const;

    /// Rational value; throws unless the domain is Q (or the cyclotomic
    /// element is a constant).
    mpq_class to_rational() const;
    std::uint64_t residue() const;
    const std::vector<mpq_class>& cyclotomic_coefficients() const;

    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text form used by the JSON matrix format.
    std::string to_string() const;

    /// Canonical total order within one domain (for sorting multisets).
    friend bool canonical_less(const Scalar& a, const Scalar& b);

private:
    using Residues = std::vector<mpq_class>;
    Scalar(Domain d, std::variant<mpq_class, std::uint64_t, Residues> v)
        : domain_(d), value_(std::move(v)) {}

    void check_same(const Scalar& o) const;

    Domain domain_;
    std::variant<mpq_class, std::uint64_t, Residues> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace orbitlab::exact
