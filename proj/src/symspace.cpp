#include "orbitlab/symspace.hpp"

#include <algorithm>
#include <sstream>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"

namespace orbitlab::symspace {

namespace {

void check_size(const Matrix& g, int p, int q) {
    if (p < 0 || q < 0) throw InvalidArgument("negative block size");
    if (!g.is_square() || g.rows() != static_cast<std::size_t>(p + q)) {
        throw ShapeMismatch("g must be square of size p + q");
    }
}

// Divides out (t - root) as often as possible and returns the multiplicity.
int strip_root(Polynomial& f, const Scalar& root) {
    const Polynomial lin({-root, Scalar::one(root.domain())}, root.domain());
    int mult = 0;
    while (!f.is_zero() && f.degree() > 0) {
        auto [quot, rem] = f.divmod(lin);
        if (!rem.is_zero()) break;
        f = std::move(quot);
        ++mult;
    }
    return mult;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n > mpz_class("1000000000000")) throw InvalidArgument("coefficients too large for rational root search");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// Roots of f lying in its coefficient field, with multiplicity. Rational
// root candidates over Q (and for cyclotomic polynomials with rational
// coefficients), exhaustive search over F_l.
std::vector<Scalar> roots_in_field(Polynomial f) {
    const Domain d = f.domain();
    std::vector<Scalar> roots;
    auto take = [&](const Scalar& r) {
        const int m = strip_root(f, r);
        for (int i = 0; i < m; ++i) roots.push_back(r);
    };
    if (d.kind() == exact::DomainKind::PrimeField) {
        for (std::uint64_t v = 0; v < d.modulus() && f.degree() > 0; ++v) {
            take(Scalar::from_int(d, static_cast<long>(v)));
        }
        return roots;
    }
    take(Scalar::zero(d));
    if (f.degree() <= 0) return roots;
    // Clear denominators; non-rational cyclotomic coefficients are rejected
    // by to_rational().
    mpz_class lcm = 1;
    for (const auto& c : f.coefficients()) {
        const mpq_class v = c.to_rational();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    const mpq_class c0 = f.coefficients().front().to_rational() * lcm;
    const mpq_class cd = f.leading().to_rational() * lcm;
    for (const auto& num : divisors(c0.get_num())) {
        for (const auto& den : divisors(cd.get_num())) {
            for (int sign : {1, -1}) {
                if (f.degree() <= 0) return roots;
                take(Scalar::from_rational(d, mpq_class(sign * num, den)));
            }
        }
    }
    return roots;
}

}  // namespace

std::string CosetInvariant::to_string() const {
    std::ostringstream os;
    os << '(' << k << ", " << nu << ", {";
    for (std::size_t i = 0; i < a_values.size(); ++i) os << (i ? "," : "") << a_values[i];
    os << "})";
    return os.str();
}

Matrix omega(int p, int q, Domain domain) {
    Matrix w(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q), domain);
    for (int i = 0; i < p + q; ++i) w.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), i < p ? 1 : -1);
    return w;
}

Matrix tau(const Matrix& g, int p, int q) {
    check_size(g, p, q);
    const Matrix w = omega(p, q, g.domain());
    return g * w * exact::inverse(g) * w;
}

bool is_closed(const Matrix& g, int p, int q) {
    return exact::is_squarefree(exact::minimal_polynomial(tau(g, p, q)));
}

Matrix rep_xpk(int p, int q, int k, Domain domain) {
    if (k < 0 || k > p || p > q) throw InvalidArgument("x_{p,k} needs 0 <= k <= p <= q");
    const auto n = static_cast<std::size_t>(p + q);
    const auto pp = static_cast<std::size_t>(p);
    const auto kk = static_cast<std::size_t>(k);
    Matrix x(n, n, domain);
    for (std::size_t i = 0; i < kk; ++i) {
        x.set(i, pp + i, 1);
        x.set(pp + i, i, 1);
    }
    for (std::size_t i = kk; i < pp; ++i) x.set(i, i, 1);
    for (std::size_t i = pp + kk; i < n; ++i) x.set(i, i, 1);
    return x;
}

Matrix rep_nu_block(int p, int q, int k, const std::vector<Scalar>& a_values, Domain domain) {
    const int nu = static_cast<int>(a_values.size());
    if (nu == 0) return rep_xpk(p, q, k, domain);
    if (domain.characteristic() == 2) throw InvalidArgument("quadratic blocks need characteristic != 2");
    if (k < 0 || nu > p - k) throw InvalidArgument("need nu <= p - k");
    const Scalar one = Scalar::one(domain);
    for (const auto& a : a_values) {
        if (!(a.domain() == domain)) throw DomainMismatch("a value outside the matrix domain");
        if (a * a == one) throw InvalidArgument("a = +-1 is not allowed");
    }
    const auto n = static_cast<std::size_t>(p + q);
    const auto v = static_cast<std::size_t>(nu);
    Matrix g(n, n, domain);
    for (std::size_t i = 0; i < v; ++i) {
        const std::size_t s = n - v + i;
        g.set(i, i, one);
        g.set(i, s, one);
        g.set(s, i, a_values[i] - one);
        g.set(s, s, a_values[i] + one);
    }
    const Matrix middle = rep_xpk(p - nu, q - nu, k, domain);
    for (std::size_t i = 0; i < middle.rows(); ++i) {
        for (std::size_t j = 0; j < middle.cols(); ++j) g.set(v + i, v + j, middle(i, j));
    }
    return g;
}

CosetInvariant coset_invariants(const Matrix& g, int p, int q) {
    const Matrix t = tau(g, p, q);
    if (!exact::is_squarefree(exact::minimal_polynomial(t))) {
        throw InvalidArgument("double coset is not closed: tau(g) is not semisimple");
    }
    const Domain d = g.domain();
    const Scalar one = Scalar::one(d);
    Polynomial f = exact::characteristic_polynomial(t);
    strip_root(f, one);
    const int minus = strip_root(f, -one);
    if (minus % 2 != 0) throw InternalInconsistency("eigenvalue -1 has odd multiplicity");

    CosetInvariant inv;
    inv.k = minus / 2;
    if (f.degree() % 2 != 0) throw InternalInconsistency("residual factor of odd degree");
    const int nu = f.degree() / 2;
    inv.nu = nu;
    if (nu == 0) return inv;

    const auto& r = f.coefficients();
    for (int i = 0; i <= 2 * nu; ++i) {
        if (!(r[static_cast<std::size_t>(i)] == r[static_cast<std::size_t>(2 * nu - i)])) {
            throw InternalInconsistency("residual factor is not palindromic");
        }
    }
    // t^{-nu} R(t) = r_nu + sum_j r_{nu+j} (t^j + t^{-j}) and t^j + t^{-j} = D_j(u)
    // with u = t + 1/t, D_0 = 2, D_1 = u, D_j = u D_{j-1} - D_{j-2}.
    const Polynomial u({Scalar::zero(d), one}, d);
    Polynomial prev({one + one}, d);
    Polynomial cur = u;
    Polynomial reduced({r[static_cast<std::size_t>(nu)]}, d);
    for (int j = 1; j <= nu; ++j) {
        reduced = reduced + Polynomial({r[static_cast<std::size_t>(nu + j)]}, d) * cur;
        Polynomial next = u * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // Each quadratic factor t^2 - 2 a t + 1 contributes the root u = 2a.
    const Scalar half = (one + one).inverse();
    for (const auto& root : roots_in_field(reduced)) inv.a_values.push_back(root * half);
    if (static_cast<int>(inv.a_values.size()) != nu) {
        throw InternalInconsistency("char poly of tau(g) has a factor that is not t^2 - 2at + 1 over " +
                                    d.to_string());
    }
    std::sort(inv.a_values.begin(), inv.a_values.end(),
              [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
    return inv;
}

std::size_t normal_space_dim(const Matrix& g, int p, int q) {
    check_size(g, p, q);
    const Matrix g_inv = exact::inverse(g);
    const std::size_t n = g.rows();
    std::vector<exact::Vector> h_basis, moved;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if ((a < static_cast<std::size_t>(p)) != (b < static_cast<std::size_t>(p))) continue;
            Matrix unit(n, n, g.domain());
            unit.set(a, b, 1);
            h_basis.push_back(unit.vectorize());
            moved.push_back((g * unit * g_inv).vectorize());
        }
    }
    return n * n - exact::subspace_sum_dim(h_basis, moved);
}

Matrix random_h_element(int p, int q, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-3, 3);
    auto block = [&](int size) {
        for (;;) {
            Matrix m(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, entry(rng));
            }
            if (size == 0 || !exact::determinant(m).is_zero()) return m;
        }
    };
    const Matrix a = block(p);
    const Matrix b = block(q);
    Matrix h(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) h.set(i, j, a(i, j));
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) h.set(a.rows() + i, a.rows() + j, b(i, j));
    }
    return h;
}

}  // namespace orbitlab::symspace
