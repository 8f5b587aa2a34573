#include "orbitlab/polynomial.hpp"

#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab::exact {

Polynomial::Polynomial(std::vector<Scalar> coeffs, Domain domain)
    : domain_(domain), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!(c.domain() == domain_)) throw DomainMismatch("polynomial coefficient outside its domain");
    }
    normalize();
}

Polynomial Polynomial::from_ints(std::vector<long> coeffs, Domain domain) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(Scalar::from_int(domain, v));
    return Polynomial(std::move(c), domain);
}

Polynomial Polynomial::monomial(Scalar c, std::size_t degree) {
    Domain d = c.domain();
    std::vector<Scalar> coeffs(degree + 1, Scalar::zero(d));
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(coeffs), d);
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(domain_);
}

Scalar Polynomial::leading() const {
    if (is_zero()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d.push_back(Scalar::from_int(domain_, static_cast<long>(k)) * coeffs_[k]);
    }
    return Polynomial(std::move(d), domain_);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    std::vector<Scalar> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c), domain_);
}

Scalar Polynomial::evaluate(const Scalar& x) const {
    Scalar acc = Scalar::zero(domain_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
    if (!m.is_square()) throw ShapeMismatch("polynomial of a non-square matrix");
    Matrix acc(m.rows(), m.cols(), domain_);
    Matrix id = Matrix::identity(m.rows(), domain_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (!(a.domain_ == b.domain_)) throw DomainMismatch("polynomial domains differ");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.domain_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(std::move(c), a.domain_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> neg = b.coeffs_;
    for (auto& x : neg) x = -x;
    return a + Polynomial(std::move(neg), b.domain_);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.domain_ == b.domain_)) throw DomainMismatch("polynomial domains differ");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.domain_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.domain_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c), a.domain_);
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (!(domain_ == divisor.domain_)) throw DomainMismatch("polynomial domains differ");
    if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Scalar> rem = coeffs_;
    std::size_t dsz = divisor.coeffs_.size();
    std::vector<Scalar> quot(rem.size() >= dsz ? rem.size() - dsz + 1 : 0, Scalar::zero(domain_));
    Scalar lead_inv = divisor.leading().inverse();
    while (rem.size() >= dsz) {
        if (rem.back().is_zero()) {
            rem.pop_back();
            continue;
        }
        std::size_t shift = rem.size() - dsz;
        Scalar c = rem.back() * lead_inv;
        for (std::size_t k = 0; k < dsz; ++k) rem[shift + k] -= c * divisor.coeffs_[k];
        quot[shift] = c;
        rem.pop_back();
    }
    return {Polynomial(std::move(quot), domain_), Polynomial(std::move(rem), domain_)};
}

bool Polynomial::divides(const Polynomial& other) const { return other.divmod(*this).second.is_zero(); }

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        os << (first ? "" : " + ") << "(" << coeffs_[k] << ")";
        if (k > 0) os << "*t^" << k;
        first = false;
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw InvalidArgument("squarefree test of the zero polynomial");
    auto ell = f.domain().characteristic();
    if (ell != 0 && ell <= static_cast<std::uint64_t>(f.degree())) {
        throw InvalidArgument("squarefree test needs characteristic 0 or l > deg f");
    }
    return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace orbitlab::exact
