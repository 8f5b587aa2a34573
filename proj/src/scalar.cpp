#include "orbitlab/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab::exact {

namespace {

using QPoly = std::vector<mpq_class>;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce_rational(const mpq_class& v, std::uint64_t ell) {
    mpz_class m(std::to_string(ell));
    mpz_class num = v.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = v.get_den() % m;
    if (den == 0) {
        throw InvalidArgument("denominator vanishes modulo " + std::to_string(ell));
    }
    auto n = std::stoull(num.get_str());
    auto d = std::stoull(den.get_str());
    return mul_mod(n, pow_mod(d, ell - 2, ell), ell);
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder and quotient of a by b (b nonzero).
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly phi_as_q(std::uint32_t m) {
    const auto& z = cyclotomic_polynomial(m);
    QPoly out;
    out.reserve(z.size());
    for (const auto& c : z) out.emplace_back(c);
    return out;
}

// Canonical residue of length phi(m).
QPoly reduce_mod_phi(const QPoly& a, std::uint32_t m) {
    QPoly phi = phi_as_q(m);
    QPoly r = poly_divmod(a, phi).second;
    r.resize(phi.size() - 1, mpq_class(0));
    return r;
}

// Inverse of a modulo the irreducible Phi_m via the extended Euclidean
// algorithm over Q[t].
QPoly inverse_mod_phi(const QPoly& a, std::uint32_t m) {
    QPoly r0 = phi_as_q(m);
    QPoly r1 = a;
    trim(r1);
    if (r1.empty()) throw InvalidArgument("division by zero in cyclotomic field");
    QPoly s0;                  // coefficient of a for r0
    QPoly s1{mpq_class(1)};    // coefficient of a for r1
    while (r1.size() > 1) {
        auto [q, r] = poly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw InternalInconsistency("cyclotomic polynomial not coprime to operand");
    mpq_class c = r1[0];
    for (auto& x : s1) x /= c;
    return reduce_mod_phi(s1, m);
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](unsigned char ch) { return std::isdigit(ch); });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_text(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

// ---------------------------------------------------------------- Domain

Domain Domain::prime_field(std::uint64_t ell) {
    if (ell > (1ULL << 31) || !is_prime(ell)) {
        throw InvalidArgument("prime field modulus must be a prime below 2^31, got " +
                              std::to_string(ell));
    }
    return Domain(DomainKind::PrimeField, ell);
}

Domain Domain::cyclotomic(std::uint32_t m) {
    if (m == 0 || m > 10000) throw InvalidArgument("cyclotomic order out of range");
    return Domain(DomainKind::Cyclotomic, m);
}

Domain Domain::parse(std::string_view text) {
    auto number = [&](std::string_view digits) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed domain '" + std::string(text) + "'");
        }
        return v;
    };
    if (text == "Q") return rational();
    if (text.starts_with("Fp:")) return prime_field(number(text.substr(3)));
    if (text.starts_with("Cyc:")) return cyclotomic(static_cast<std::uint32_t>(number(text.substr(4))));
    throw ParseError("unknown domain '" + std::string(text) + "'");
}

std::size_t Domain::extension_degree() const {
    if (kind_ != DomainKind::Cyclotomic) return 1;
    return cyclotomic_polynomial(static_cast<std::uint32_t>(modulus_)).size() - 1;
}

std::string Domain::to_string() const {
    switch (kind_) {
        case DomainKind::Rational: return "Q";
        case DomainKind::PrimeField: return "Fp:" + std::to_string(modulus_);
        case DomainKind::Cyclotomic: return "Cyc:" + std::to_string(modulus_);
    }
    return "?";
}

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint32_t m) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<mpz_class>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d, computed without recursion
    // into the locked cache.
    std::map<std::uint32_t, QPoly> local;
    for (std::uint32_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        QPoly num(d + 1, mpq_class(0));
        num[0] = -1;
        num[d] = 1;
        for (auto& [e, phi_e] : local) {
            if (d % e == 0) num = poly_divmod(num, phi_e).first;
        }
        local[d] = num;
    }
    std::vector<mpz_class> out;
    for (const auto& c : local[m]) {
        if (c.get_den() != 1) throw InternalInconsistency("non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    return cache.emplace(m, std::move(out)).first->second;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(mpq_class v) : value_(std::move(v)) {
    std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::zero(const Domain& d) { return from_int(d, 0); }
Scalar Scalar::one(const Domain& d) { return from_int(d, 1); }

Scalar Scalar::from_int(const Domain& d, long v) { return from_rational(d, mpq_class(v)); }

Scalar Scalar::from_rational(const Domain& d, const mpq_class& v) {
    switch (d.kind()) {
        case DomainKind::Rational: return Scalar(d, mpq_class(v));
        case DomainKind::PrimeField: return Scalar(d, reduce_rational(v, d.modulus()));
        case DomainKind::Cyclotomic: {
            Residues r(d.extension_degree(), mpq_class(0));
            r[0] = v;
            return Scalar(d, std::move(r));
        }
    }
    throw InternalInconsistency("unreachable domain kind");
}

Scalar Scalar::root_of_unity(std::uint32_t m, long j) {
    Domain d = Domain::cyclotomic(m);
    long e = ((j % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
    QPoly mono(static_cast<std::size_t>(e) + 1, mpq_class(0));
    mono[static_cast<std::size_t>(e)] = 1;
    return Scalar(d, reduce_mod_phi(mono, m));
}

Scalar Scalar::parse(const Domain& d, std::string_view text) {
    switch (d.kind()) {
        case DomainKind::Rational: return Scalar(parse_rational(text));
        case DomainKind::PrimeField: {
            return from_rational(d, parse_rational(text));
        }
        case DomainKind::Cyclotomic: {
            if (text.starts_with("zeta:")) {
                std::string rest(text.substr(5));
                auto colon = rest.find(':');
                if (colon == std::string::npos) throw ParseError("expected zeta:m:j");
                auto m = static_cast<std::uint32_t>(std::stoul(rest.substr(0, colon)));
                long j = std::stol(rest.substr(colon + 1));
                if (m == 0 || d.modulus() % m != 0) {
                    throw DomainMismatch("zeta_" + std::to_string(m) + " does not lie in " +
                                         d.to_string());
                }
                // zeta_m = zeta_M^(M/m)
                return root_of_unity(static_cast<std::uint32_t>(d.modulus()),
                                     j * static_cast<long>(d.modulus() / m));
            }
            QPoly coeffs;
            std::string s(text);
            std::size_t start = 0;
            while (start <= s.size()) {
                auto comma = s.find(',', start);
                if (comma == std::string::npos) comma = s.size();
                coeffs.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
                start = comma + 1;
            }
            return Scalar(d, reduce_mod_phi(coeffs, static_cast<std::uint32_t>(d.modulus())));
        }
    }
    throw InternalInconsistency("unreachable domain kind");
}

void Scalar::check_same(const Scalar& o) const {
    if (!(domain_ == o.domain_)) {
        throw DomainMismatch("scalar domains differ: " + domain_.to_string() + " vs " +
                             o.domain_.to_string());
    }
}

bool Scalar::is_zero() const {
    switch (domain_.kind()) {
        case DomainKind::Rational: return std::get<mpq_class>(value_) == 0;
        case DomainKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
        case DomainKind::Cyclotomic: {
            const auto& r = std::get<Residues>(value_);
            return std::all_of(r.begin(), r.end(), [](const mpq_class& c) { return c == 0; });
        }
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(domain_); }

mpq_class Scalar::to_rational() const {
    switch (domain_.kind()) {
        case DomainKind::Rational: return std::get<mpq_class>(value_);
        case DomainKind::Cyclotomic: {
            const auto& r = std::get<Residues>(value_);
            if (std::any_of(r.begin() + 1, r.end(), [](const mpq_class& c) { return c != 0; })) {
                throw InvalidArgument("cyclotomic value is not rational");
            }
            return r[0];
        }
        case DomainKind::PrimeField: break;
    }
    throw DomainMismatch("prime-field value has no rational form");
}

std::uint64_t Scalar::residue() const {
    if (domain_.kind() != DomainKind::PrimeField) throw DomainMismatch("not a prime-field value");
    return std::get<std::uint64_t>(value_);
}

const std::vector<mpq_class>& Scalar::cyclotomic_coefficients() const {
    if (domain_.kind() != DomainKind::Cyclotomic) throw DomainMismatch("not a cyclotomic value");
    return std::get<Residues>(value_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidArgument("division by zero");
    switch (domain_.kind()) {
        case DomainKind::Rational: {
            mpq_class v = 1 / std::get<mpq_class>(value_);
            return Scalar(domain_, v);
        }
        case DomainKind::PrimeField: {
            auto ell = domain_.modulus();
            return Scalar(domain_, pow_mod(std::get<std::uint64_t>(value_), ell - 2, ell));
        }
        case DomainKind::Cyclotomic:
            return Scalar(domain_, inverse_mod_phi(std::get<Residues>(value_),
                                                   static_cast<std::uint32_t>(domain_.modulus())));
    }
    throw InternalInconsistency("unreachable domain kind");
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar r = one(domain_);
    while (n > 0) {
        if (n & 1UL) r *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (domain_.kind()) {
        case DomainKind::Rational: std::get<mpq_class>(r.value_) *= -1; break;
        case DomainKind::PrimeField: {
            auto& v = std::get<std::uint64_t>(r.value_);
            v = v == 0 ? 0 : domain_.modulus() - v;
            break;
        }
        case DomainKind::Cyclotomic:
            for (auto& c : std::get<Residues>(r.value_)) c = -c;
            break;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    switch (domain_.kind()) {
        case DomainKind::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_); break;
        case DomainKind::PrimeField: {
            auto& v = std::get<std::uint64_t>(value_);
            v = (v + std::get<std::uint64_t>(o.value_)) % domain_.modulus();
            break;
        }
        case DomainKind::Cyclotomic: {
            auto& r = std::get<Residues>(value_);
            const auto& s = std::get<Residues>(o.value_);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += s[i];
            break;
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    switch (domain_.kind()) {
        case DomainKind::Rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_); break;
        case DomainKind::PrimeField: {
            auto& v = std::get<std::uint64_t>(value_);
            v = mul_mod(v, std::get<std::uint64_t>(o.value_), domain_.modulus());
            break;
        }
        case DomainKind::Cyclotomic: {
            auto& r = std::get<Residues>(value_);
            r = reduce_mod_phi(poly_mul(r, std::get<Residues>(o.value_)),
                               static_cast<std::uint32_t>(domain_.modulus()));
            break;
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.domain_ == b.domain_ && a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    switch (a.domain_.kind()) {
        case DomainKind::Rational: return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
        case DomainKind::PrimeField:
            return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
        case DomainKind::Cyclotomic: {
            const auto& x = std::get<Scalar::Residues>(a.value_);
            const auto& y = std::get<Scalar::Residues>(b.value_);
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        }
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (domain_.kind()) {
        case DomainKind::Rational: return rational_text(std::get<mpq_class>(value_));
        case DomainKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
        case DomainKind::Cyclotomic: {
            std::string out;
            for (const auto& c : std::get<Residues>(value_)) {
                if (!out.empty()) out += ',';
                out += rational_text(c);
            }
            return out;
        }
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace orbitlab::exact
