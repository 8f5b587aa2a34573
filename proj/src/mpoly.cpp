#include "orbitlab/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "orbitlab/error.hpp"

namespace orbitlab::exact {

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
    MPoly r(nvars, c.domain());
    r.add_term(Exponents(nvars, 0), c);
    return r;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index, Domain domain) {
    if (index >= nvars) throw InvalidArgument("variable index out of range");
    MPoly r(nvars, domain);
    Exponents e(nvars, 0);
    e[index] = 1;
    r.add_term(e, Scalar::one(domain));
    return r;
}

void MPoly::check_same(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw ShapeMismatch("polynomials in different numbers of variables");
    if (!(domain_ == o.domain_)) throw DomainMismatch("polynomials over different domains");
}

void MPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw ShapeMismatch("evaluation point has the wrong length");
    Scalar total = Scalar::zero(domain_);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] != 0) term *= point[i].pow(static_cast<long>(e[i]));
        }
        total += term;
    }
    return total;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_, domain_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b);
    MPoly r(a.nvars_, a.domain_);
    MPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Scalar>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto degree = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); };
    std::sort(order.begin(), order.end(), [&](auto* x, auto* y) {
        const unsigned dx = degree(x->first);
        const unsigned dy = degree(y->first);
        return dx != dy ? dx > dy : x->first > y->first;
    });

    const Scalar one = Scalar::one(domain_);
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& [e, c] = *order[k];
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += '*';
            monomial += 'x' + std::to_string(i + 1);
            if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
        }
        // Rational coefficients get their sign pulled out; other domains
        // print the canonical value in parentheses.
        bool negative = false;
        Scalar magnitude = c;
        if (domain_.kind() == DomainKind::Rational && c.to_rational() < 0) {
            negative = true;
            magnitude = -c;
        }
        std::string coeff;
        if (monomial.empty() || !(magnitude == one)) {
            if (domain_.kind() != DomainKind::Rational) {
                coeff = "(" + magnitude.to_string() + ")";
            } else {
                const mpq_class v = magnitude.to_rational();
                coeff = v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
            }
        }
        std::string term = coeff;
        if (!coeff.empty() && !monomial.empty()) term += '*';
        term += monomial;
        if (k == 0) {
            out += negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

}  // namespace orbitlab::exact
