#include <doctest.h>

#include <random>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/symspace.hpp"

using namespace orbitlab;
using namespace orbitlab::symspace;

namespace {

Scalar q(long num, long den = 1) { return Scalar(mpq_class(num, den)); }

long normal_formula(int p, int q_, int k) { return 2L * k * k + 2L * (p - k) * (q_ - k); }

}  // namespace

TEST_CASE("tau examples") {
    CHECK(tau(Matrix::identity(3), 1, 2) == Matrix::identity(3));
    CHECK(tau(rep_xpk(1, 2, 1), 1, 2) == Matrix::from_ints(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 1}));
    const Matrix u = Matrix::from_ints(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1});
    CHECK(tau(u, 1, 2) == Matrix::from_ints(3, 3, {1, 0, 2, 0, 1, 0, 0, 0, 1}));
    CHECK_THROWS_AS(tau(Matrix(3, 3), 1, 2), SingularMatrix);
    CHECK_THROWS_AS(tau(Matrix::identity(3), 2, 2), ShapeMismatch);
}

TEST_CASE("closedness") {
    CHECK(is_closed(Matrix::identity(3), 1, 2));
    CHECK_FALSE(is_closed(Matrix::from_ints(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1}), 1, 2));
    for (int p = 0; p <= 3; ++p) {
        for (int k = 0; k <= p; ++k) CHECK(is_closed(rep_xpk(p, p + 1, k), p, p + 1));
    }
}

TEST_CASE("x_{p,k}") {
    CHECK(rep_xpk(2, 3, 0) == Matrix::identity(5));
    CHECK(rep_xpk(1, 2, 1) == Matrix::from_ints(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(rep_xpk(2, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(rep_xpk(3, 2, 1), InvalidArgument);
    for (int p = 0; p <= 4; ++p) {
        for (int q_ = p; q_ <= p + 2; ++q_) {
            for (int k = 0; k <= p; ++k) {
                const Matrix x = rep_xpk(p, q_, k);
                CHECK(x * x == Matrix::identity(x.rows()));
                if (p <= 3) {
                    const auto inv = coset_invariants(x, p, q_);
                    CHECK(inv.k == k);
                    CHECK(inv.nu == 0);
                    CHECK(inv.a_values.empty());
                }
            }
        }
    }
}

TEST_CASE("nu-block representative") {
    CHECK(rep_nu_block(1, 2, 1, {}) == rep_xpk(1, 2, 1));
    const Matrix g = rep_nu_block(1, 2, 0, {q(2)});
    CHECK(g == Matrix::from_ints(3, 3, {1, 0, 1, 0, 1, 0, 1, 0, 3}));
    CHECK(exact::characteristic_polynomial(tau(g, 1, 2)) ==
          exact::Polynomial::from_ints({1, -4, 1}) * exact::Polynomial::from_ints({-1, 1}));
    CHECK(exact::determinant(g) == q(2));
    CHECK_THROWS_AS(rep_nu_block(1, 2, 0, {q(1)}), InvalidArgument);
    CHECK_THROWS_AS(rep_nu_block(1, 2, 0, {q(-1)}), InvalidArgument);
    CHECK_THROWS_AS(rep_nu_block(1, 2, 1, {q(2)}), InvalidArgument);
    const auto f3 = exact::Domain::prime_field(3);
    CHECK_NOTHROW(rep_nu_block(1, 2, 0, {Scalar::from_int(f3, 0)}, f3));
}

TEST_CASE("coset invariant examples") {
    CHECK(coset_invariants(Matrix::identity(3), 1, 2) == CosetInvariant{0, 0, {}});
    CHECK(coset_invariants(rep_xpk(1, 2, 1), 1, 2) == CosetInvariant{1, 0, {}});
    CHECK(coset_invariants(rep_nu_block(1, 2, 0, {q(2)}), 1, 2) == CosetInvariant{0, 1, {q(2)}});
    CHECK_THROWS_AS(coset_invariants(Matrix::from_ints(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1}), 1, 2), InvalidArgument);
}

TEST_CASE("nu-block round trip") {
    std::vector<Scalar> pool;
    for (long num = -5; num <= 5; ++num) {
        if (num == 0 || num == 1 || num == -1) continue;
        pool.push_back(q(num));
    }
    pool.push_back(q(1, 2));
    pool.push_back(q(-3, 4));
    for (int p = 1; p <= 3; ++p) {
        for (int q_ : {p, p + 1}) {
            for (int k = 0; k < p; ++k) {
                for (int nu = 1; nu <= p - k; ++nu) {
                    for (std::size_t start = 0; start < pool.size(); start += 3) {
                        std::vector<Scalar> a;
                        for (int i = 0; i < nu; ++i) a.push_back(pool[(start + static_cast<std::size_t>(i) * 5) % pool.size()]);
                        const Matrix g = rep_nu_block(p, q_, k, a);
                        CHECK(is_closed(g, p, q_));
                        auto sorted = a;
                        std::sort(sorted.begin(), sorted.end(), [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
                        CHECK(coset_invariants(g, p, q_) == CosetInvariant{k, nu, sorted});
                    }
                }
            }
        }
    }
}

TEST_CASE("nu-block over a prime field") {
    const auto f7 = exact::Domain::prime_field(7);
    const std::vector<Scalar> a{Scalar::from_int(f7, 3), Scalar::from_int(f7, 0)};
    const Matrix g = rep_nu_block(2, 3, 0, a, f7);
    const auto inv = coset_invariants(g, 2, 3);
    CHECK(inv.k == 0);
    CHECK(inv.nu == 2);
    CHECK(inv.a_values == std::vector<Scalar>{Scalar::from_int(f7, 0), Scalar::from_int(f7, 3)});
}

TEST_CASE("normal space dimensions") {
    CHECK(normal_space_dim(Matrix::identity(3), 1, 2) == 4);
    CHECK(normal_space_dim(rep_xpk(1, 2, 1), 1, 2) == 2);
    CHECK(normal_space_dim(rep_xpk(2, 3, 1), 2, 3) == 6);
    for (int p = 0; p <= 4; ++p) {
        for (int q_ : {p, p + 1}) {
            for (int k = 0; k <= p; ++k) {
                CHECK(static_cast<long>(normal_space_dim(rep_xpk(p, q_, k), p, q_)) == normal_formula(p, q_, k));
            }
        }
    }
}

TEST_CASE("coset invariants are bi-invariant under H") {
    std::mt19937_64 rng(2024);
    for (int p = 1; p <= 3; ++p) {
        const int q_ = p + 1;
        std::vector<Matrix> reps;
        for (int k = 0; k <= p; ++k) reps.push_back(rep_xpk(p, q_, k));
        reps.push_back(rep_nu_block(p, q_, 0, {q(3)}));
        if (p >= 2) reps.push_back(rep_nu_block(p, q_, 1, {q(-2)}));
        for (const auto& g : reps) {
            const auto expected = coset_invariants(g, p, q_);
            for (int trial = 0; trial < 50; ++trial) {
                const Matrix h1 = random_h_element(p, q_, rng);
                const Matrix h2 = random_h_element(p, q_, rng);
                CHECK(coset_invariants(h1 * g * h2, p, q_) == expected);
            }
        }
    }
}
